#pragma once

#include <compare>
#include <string>
#include <vector>

namespace heckeforge::weyl {

// Element of the extended affine Weyl group of GL_r, as the pair (perm, lattice)
// with window u(i) = perm(i) + r * lattice_i for i = 1..r and u(i + r) = u(i) + r.
class AffinePermutation {
 public:
  AffinePermutation() : AffinePermutation(1) {}
  explicit AffinePermutation(int r);  // identity
  // perm holds the values perm(1..r) (a permutation of 1..r).
  AffinePermutation(std::vector<int> perm, std::vector<long> lattice);

  static AffinePermutation identity(int r) { return AffinePermutation(r); }
  static AffinePermutation from_window(const std::vector<long>& window);
  static AffinePermutation translation(const std::vector<long>& lambda);
  static AffinePermutation finite(const std::vector<int>& perm);
  // s_i for 1 <= i <= r-1 and the affine reflection s_0.
  static AffinePermutation simple(int r, int i);
  static AffinePermutation rotation(int r);

  int rank() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<long>& lattice() const { return lattice_; }
  std::vector<long> window() const;
  // u(i) for any integer i.
  long operator()(long i) const;

  long length() const;
  AffinePermutation inverse() const;
  bool is_finite() const;
  long rotation_degree() const;  // sum of the lattice, the power of pi in a reduced word

  // s_i on the right / left lowers the length.
  bool right_descent(int i) const;
  bool left_descent(int i) const;

  friend AffinePermutation operator*(const AffinePermutation& a, const AffinePermutation& b);
  friend bool operator==(const AffinePermutation& a, const AffinePermutation& b) = default;
  // Lexicographic by window.
  friend std::strong_ordering operator<=>(const AffinePermutation& a, const AffinePermutation& b);

  std::string to_string() const;

 private:
  std::vector<int> perm_;
  std::vector<long> lattice_;
};

// w = rotation^c * s_word[0] * s_word[1] * ...
struct ReducedWord {
  long rotation_power = 0;
  std::vector<int> word;
};

ReducedWord reduced_word(const AffinePermutation& w);
AffinePermutation from_reduced_word(int r, const ReducedWord& rw);

class LeviShape {
 public:
  explicit LeviShape(std::vector<int> parts);
  const std::vector<int>& parts() const { return parts_; }
  int rank() const { return rank_; }
  std::size_t size() const { return parts_.size(); }
  int offset(std::size_t k) const { return offsets_[k]; }
  // Factor holding position i (1-based).
  std::size_t block_of(int i) const;
  // Whether s_i (1 <= i <= r-1) lies in the Levi subgroup.
  bool contains_simple(int i) const;
  bool contains(const AffinePermutation& finite_perm) const;
  friend bool operator==(const LeviShape&, const LeviShape&) = default;
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  std::vector<int> offsets_;
  int rank_ = 0;
};

// Minimal-length representatives of W_L \ S_r, sorted by window.
std::vector<AffinePermutation> min_coset_reps(const LeviShape& shape);

// x = y * w' with y in the Levi subgroup and w' a minimal coset representative.
struct CosetSplit {
  AffinePermutation levi_part;
  AffinePermutation rep;
};
CosetSplit split_coset(const LeviShape& shape, const AffinePermutation& x);

long multinomial(const std::vector<int>& parts);

}  // namespace heckeforge::weyl

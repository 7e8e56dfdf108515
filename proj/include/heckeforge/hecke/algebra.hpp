#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heckeforge/exact/scalar.hpp"
#include "heckeforge/weyl/affine_permutation.hpp"

namespace heckeforge::hecke {

using exact::Field;
using exact::Rational;
using exact::Scalar;
using weyl::AffinePermutation;

// H_r(q) with quadratic relation (T - q)(T + 1) = 0, either over Q(q) or with q
// specialized to a nonzero rational, optionally inside a cyclotomic field.
class HeckeAlgebra {
 public:
  static HeckeAlgebra generic(int r);
  static HeckeAlgebra specialized(int r, const Rational& q, int conductor = 1);

  int rank() const { return r_; }
  const Field& field() const { return field_; }
  const Scalar& q() const { return q_; }
  bool is_generic() const { return field_.kind == Field::Kind::RatFunc; }
  std::optional<Rational> q_value() const;
  // A square root of q inside the coefficient field, if there is one.
  const std::optional<Scalar>& sqrt_q() const { return sqrt_q_; }

  HeckeAlgebra with_rank(int r) const;
  friend bool operator==(const HeckeAlgebra& a, const HeckeAlgebra& b) {
    return a.r_ == b.r_ && a.field_ == b.field_ && a.q_ == b.q_;
  }
  std::string to_string() const;

 private:
  int r_ = 1;
  Field field_;
  Scalar q_;
  std::optional<Scalar> sqrt_q_;
};

// Element of H_r(q) in Iwahori-Matsumoto normal form sum c_w T_w.
class HeckeElement {
 public:
  using Terms = std::map<AffinePermutation, Scalar>;

  explicit HeckeElement(const HeckeAlgebra& alg) : alg_(alg) {}
  static HeckeElement basis(const HeckeAlgebra& alg, const AffinePermutation& w, const Scalar& c = Scalar(Rational(1)));
  static HeckeElement one(const HeckeAlgebra& alg) { return basis(alg, AffinePermutation::identity(alg.rank())); }

  const HeckeAlgebra& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const AffinePermutation& w) const;
  std::vector<AffinePermutation> support() const;
  void add_term(const AffinePermutation& w, const Scalar& c);

  HeckeElement operator-() const;
  friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b);
  friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b);
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  HeckeElement scaled(const Scalar& c) const;
  friend bool operator==(const HeckeElement& a, const HeckeElement& b);

  // T_{s_i} * this and T_pi^c * this.
  HeckeElement left_mul_simple(int i) const;
  HeckeElement left_mul_rotation(long c) const;

  std::string to_string() const;

 private:
  HeckeAlgebra alg_;
  Terms terms_;
};

HeckeElement im_multiply(const HeckeElement& a, const HeckeElement& b);
HeckeElement invert_basis_element(const HeckeAlgebra& alg, const AffinePermutation& w);
// theta_lambda = T_{t_mu} T_{t_nu}^{-1} with lambda = mu - nu, mu and nu dominant.
HeckeElement theta(const HeckeAlgebra& alg, const std::vector<long>& lambda);
// The same with a caller-chosen dominant nu (for independence checks).
HeckeElement theta_via(const HeckeAlgebra& alg, const std::vector<long>& lambda, const std::vector<long>& nu);
bool is_dominant(const std::vector<long>& lambda);
HeckeElement star(const HeckeElement& x);
// q = c on an element over Q(q).
HeckeElement specialize(const HeckeElement& x, const Rational& c);

}  // namespace heckeforge::hecke

#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "heckeforge/hecke/algebra.hpp"

namespace heckeforge::hecke {

struct BernsteinKey {
  std::vector<long> lambda;
  AffinePermutation x;  // finite
  friend bool operator==(const BernsteinKey&, const BernsteinKey&) = default;
  friend std::strong_ordering operator<=>(const BernsteinKey& a, const BernsteinKey& b) {
    if (auto c = a.lambda <=> b.lambda; c != 0) return c;
    return a.x <=> b.x;
  }
};

// Element written as sum c * theta_lambda * T_x with x finite.
class BernsteinElement {
 public:
  using Terms = std::map<BernsteinKey, Scalar>;

  explicit BernsteinElement(const HeckeAlgebra& alg) : alg_(alg) {}
  static BernsteinElement term(const HeckeAlgebra& alg, const std::vector<long>& lambda, const AffinePermutation& x,
                               const Scalar& c = Scalar(Rational(1)));
  static BernsteinElement one(const HeckeAlgebra& alg);

  const HeckeAlgebra& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const std::vector<long>& lambda, const AffinePermutation& x, const Scalar& c);

  friend BernsteinElement operator+(const BernsteinElement& a, const BernsteinElement& b);
  BernsteinElement scaled(const Scalar& c) const;
  friend bool operator==(const BernsteinElement& a, const BernsteinElement& b);

  // Left multiplication by T_{s_i} (0 <= i < r), T_{s_i}^{-1}, theta_mu and T_pi^c.
  BernsteinElement left_mul_simple(int i) const;
  BernsteinElement left_mul_simple_inverse(int i) const;
  BernsteinElement left_mul_theta(const std::vector<long>& mu) const;
  BernsteinElement left_mul_rotation(long c) const;
  // Right multiplication by T_{s_i}, 1 <= i < r.
  BernsteinElement right_mul_simple(int i) const;

  std::string to_string() const;

 private:
  BernsteinElement left_mul_finite_simple(int i) const;
  HeckeAlgebra alg_;
  Terms terms_;
};

BernsteinElement to_bernstein(const HeckeElement& x);
HeckeElement from_bernstein(const BernsteinElement& x);

// The finite permutation c with t_{e_1} = pi * c (c(1) = r, c(i) = i - 1).
AffinePermutation rotation_cofactor(int r);

}  // namespace heckeforge::hecke

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "heckeforge/exact/rational.hpp"

namespace heckeforge::exact {

// Dense univariate polynomial over Q, coefficients stored low degree first
// with no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(std::int64_t c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);

  static Poly x();
  static Poly monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const { return c_.empty() ? Rational() : c_.back(); }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  Poly scaled(const Rational& c) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Euclidean division; throws DivisionByZero for b = 0.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  Poly monic() const;
  static Poly gcd(Poly a, Poly b);

  Rational eval(const Rational& x) const;
  Poly derivative() const;
  Poly compose_neg() const;  // p(-x)
  Poly pow(unsigned e) const;

  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Number of sign changes in the coefficient sequence, zeros skipped.
int sign_changes(const std::vector<Rational>& seq);

// Sturm sequence of p (p, p', -rem, ...).
std::vector<Poly> sturm_sequence(const Poly& p);

// Number of distinct real roots in the half-open interval (a, b].
int count_real_roots(const std::vector<Poly>& sturm, const Rational& a, const Rational& b);

// Bound B with every real root in (-B, B).
Rational root_bound(const Poly& p);

// Disjoint intervals (a, b], sorted, each holding exactly one distinct real root
// of p (p != 0). Endpoints are never roots.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Poly& p);

// Rational roots of p (distinct). Candidate enumeration uses trial division;
// sets `complete` to false if a coefficient was too large to factor.
std::vector<Rational> rational_roots(const Poly& p, bool* complete = nullptr);

}  // namespace heckeforge::exact

#pragma once

#include <string>

#include "heckeforge/exact/polynomial.hpp"

namespace heckeforge::exact {

// Rational function num/den in the indeterminate q over Q, reduced with a
// monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(std::int64_t c) : RatFunc(Rational(c)) {}            // NOLINT(google-explicit-constructor)
  RatFunc(Poly num, Poly den);
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(Rational(1)) {}

  static RatFunc q() { return RatFunc(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.degree() == 0 && num_ == den_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  // Constant value, only valid when is_constant().
  Rational constant() const { return num_.coeff(0); }

  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc pow(long e) const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Evaluation at q = c. Throws PoleError if the denominator vanishes.
  Rational eval(const Rational& c) const;

  std::string to_string() const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace heckeforge::exact

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

namespace heckeforge::exact {

// Arbitrary-precision rational number, always in lowest terms with a
// positive denominator.
//
// Values whose numerator and denominator fit in int64 are stored inline;
// anything larger is promoted to a shared immutable mpq_class and demoted
// again as soon as a result fits.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);
  explicit Rational(const mpz_class& z);

  // Accepts "p", "-p", "p/q". Throws InvalidArgument on malformed input and
  // DivisionByZero on a zero denominator.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;

  // Fits-in-int64 accessors; only valid when is_small() holds.
  bool is_small() const { return !big_; }
  std::int64_t small_num() const { return num_; }
  std::int64_t small_den() const { return den_; }

  Rational operator-() const;
  Rational inverse() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational pow(long e) const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // Exact square root when this is the square of a rational.
  bool is_perfect_square() const;
  Rational sqrt_exact() const;

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;

 private:
  static Rational from_mpq(mpq_class q);
  static Rational from_i128(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace heckeforge::exact

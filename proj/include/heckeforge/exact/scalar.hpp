#pragma once

#include <string>
#include <variant>

#include "heckeforge/exact/cyclotomic.hpp"
#include "heckeforge/exact/ratfunc.hpp"
#include "heckeforge/exact/rational.hpp"

namespace heckeforge::exact {

// Which coefficient field a scalar or matrix lives in.
struct Field {
  enum class Kind { Rational, RatFunc, Cyclotomic };
  Kind kind = Kind::Rational;
  int conductor = 1;  // meaningful for Cyclotomic only

  static Field rational() { return {}; }
  static Field ratfunc() { return {Kind::RatFunc, 1}; }
  static Field cyclotomic(int n);

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind == b.kind && (a.kind != Kind::Cyclotomic || a.conductor == b.conductor);
  }
  std::string to_string() const;
};

// Smallest field containing both; throws FieldMismatch if none is supported.
Field join(const Field& a, const Field& b);

class Scalar {
 public:
  using Value = std::variant<Rational, RatFunc, Cyclotomic>;

  Scalar() = default;
  Scalar(const Rational& r) : v_(r) {}         // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t r) : v_(Rational(r)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const RatFunc& f) : v_(f) {}          // NOLINT(google-explicit-constructor)
  Scalar(const Cyclotomic& c) : v_(c) {}       // NOLINT(google-explicit-constructor)

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);

  const Value& value() const { return v_; }
  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  const Rational& as_rational() const;
  const RatFunc& as_ratfunc() const;
  const Cyclotomic& as_cyclotomic() const;

  // Image in a larger field; throws FieldMismatch if f does not contain this.
  Scalar to_field(const Field& f) const;
  // Rational value if this scalar is one (any variant with a rational value).
  bool is_rational_value() const;
  Rational rational_value() const;

  Scalar conj() const;
  Scalar inverse() const;
  Scalar pow(long e) const;
  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  Value v_;
};

// Evaluation q = c of a RatFunc scalar (rationals pass through).
Rational specialize_q(const Scalar& s, const Rational& c);

}  // namespace heckeforge::exact

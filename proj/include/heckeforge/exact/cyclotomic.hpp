#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "heckeforge/exact/rational.hpp"

namespace heckeforge::exact {

// Element of Q(zeta_N), N <= 16, as coefficients of 1, zeta, ..., zeta^(phi(N)-1)
// reduced modulo the N-th cyclotomic polynomial.
class Cyclotomic {
 public:
  static constexpr int kMaxConductor = 16;
  static constexpr int kMaxDegree = 12;

  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int conductor);
  Cyclotomic(const Rational& c, int conductor);
  Cyclotomic(const std::vector<Rational>& coeffs, int conductor);

  // zeta_N^k for any integer k.
  static Cyclotomic zeta(int conductor, long k);
  // A square root of c inside Q(zeta_N), if one exists there.
  static std::optional<Cyclotomic> sqrt_rational(const Rational& c, int conductor);
  static int phi(int conductor);

  int conductor() const { return n_; }
  int degree() const;
  const Rational& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  std::vector<Rational> coeffs() const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws if not rational

  // Image under Q(zeta_N) -> Q(zeta_M), N | M.
  Cyclotomic embed(int conductor) const;

  Cyclotomic conj() const;
  Cyclotomic operator-() const;
  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b);
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this += -b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
  Cyclotomic scaled(const Rational& r) const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  std::string to_string() const;

 private:
  static int common_conductor(int a, int b);
  std::uint8_t n_ = 1;
  std::array<Rational, kMaxDegree> c_{};
};

}  // namespace heckeforge::exact

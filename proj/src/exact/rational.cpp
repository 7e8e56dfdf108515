#include "heckeforge/exact/rational.hpp"

#include <limits>
#include <utility>

#include "heckeforge/error.hpp"

namespace heckeforge::exact {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

u128 gcd_u128(u128 a, u128 b) {
  constexpr u128 kMax64 = std::numeric_limits<std::uint64_t>::max();
  if (a <= kMax64 && b <= kMax64)
    return gcd_u64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  while (b != 0) {
    if (a <= kMax64 && b <= kMax64)
      return gcd_u64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  auto hi = static_cast<std::uint64_t>(u >> 64);
  auto lo = static_cast<std::uint64_t>(u);
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &hi);
  z <<= 64;
  mpz_class l;
  mpz_import(l.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &lo);
  z += l;
  return neg ? mpz_class(-z) : z;
}

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
    z = static_cast<long>(v);
  } else {
    z = to_mpz(static_cast<i128>(v));
  }
  return z;
}

bool mpz_fits64(const mpz_class& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 2) <= 62 || z.fits_slong_p();
}

}  // namespace

Rational::Rational(std::int64_t n) : num_(n), den_(1) {
  if (n == std::numeric_limits<std::int64_t>::min()) *this = from_i128(n, 1);
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational::Rational(const mpz_class& z) { *this = from_mpq(mpq_class(z)); }

Rational Rational::from_i128(i128 n, i128 d) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  u128 un = n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n);
  u128 g = gcd_u128(un, static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  // Keep num_ away from INT64_MIN so negation never overflows.
  if (fits64(n) && fits64(d) && n != std::numeric_limits<std::int64_t>::min()) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  mpq_class q(to_mpz(n), to_mpz(d));
  Rational r;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (mpz_fits64(n) && mpz_fits64(d) && n.fits_slong_p() && d.fits_slong_p()) {
    long nl = n.get_si();
    if (nl != std::numeric_limits<long>::min()) {
      Rational r;
      r.num_ = nl;
      r.den_ = d.get_si();
      return r;
    }
  }
  Rational r;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
  };
  trim(s);
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string ns = slash == std::string::npos ? s : s.substr(0, slash);
  std::string ds = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
  trim(ns);
  trim(ds);
  if (!valid_int(ns) || !valid_int(ds) || (ds[0] == '-' || ds[0] == '+'))
    throw InvalidArgument("malformed rational '" + s + "'");
  if (ns[0] == '+') ns.erase(ns.begin());
  mpz_class n(ns, 10), d(ds, 10);
  if (d == 0) throw DivisionByZero("rational with zero denominator: '" + s + "'");
  return from_mpq(mpq_class(n, d));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : to_mpz(num_); }

mpz_class Rational::denominator() const { return big_ ? big_->get_den() : to_mpz(den_); }

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(to_mpz(num_), to_mpz(den_));
}

Rational Rational::operator-() const {
  if (!big_) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return from_mpq(-*big_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (!big_) return from_i128(den_, num_);
  return from_mpq(mpq_class(big_->get_den(), big_->get_num()));
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Rational result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_i128(static_cast<i128>(a.num_) + b.num_, 1);
    i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_i128(n, d);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (!a.big_ && !b.big_) {
    return Rational::from_i128(static_cast<i128>(a.num_) * b.num_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical forms differ in storage class only if values differ
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool Rational::is_perfect_square() const {
  if (sign() < 0) return false;
  mpz_class n = numerator(), d = denominator();
  return mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t());
}

Rational Rational::sqrt_exact() const {
  if (!is_perfect_square()) throw InvalidArgument(to_string() + " is not a rational square");
  mpz_class n = numerator(), d = denominator(), rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

std::string Rational::to_string() const {
  if (!big_) {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  if (big_->get_den() == 1) return big_->get_num().get_str();
  return big_->get_num().get_str() + "/" + big_->get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace heckeforge::exact

#include "heckeforge/exact/ratfunc.hpp"

#include "heckeforge/error.hpp"

namespace heckeforge::exact {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Poly::divmod(num_, g).first;
      den_ = Poly::divmod(den_, g).first;
    }
  }
  Rational lead = den_.leading();
  if (!lead.is_one()) {
    Rational inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFunc r;
  if (a.den_ == b.den_) {
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
    if (r.den_.degree() > 0) r.normalize();
    else if (r.num_.is_zero()) r.den_ = Poly(Rational(1));
    return r;
  }
  r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  RatFunc r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_ * b.den_;
  if (r.den_.degree() > 0) r.normalize();
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

Rational RatFunc::eval(const Rational& c) const {
  Rational d = den_.eval(c);
  if (d.is_zero()) throw PoleError("pole at q = " + c.to_string() + " in " + to_string());
  return num_.eval(c) / d;
}

std::string RatFunc::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace heckeforge::exact

#include "heckeforge/exact/scalar.hpp"

#include <numeric>

#include "heckeforge/error.hpp"

namespace heckeforge::exact {

Field Field::cyclotomic(int n) {
  Cyclotomic::phi(n);  // validates range
  return {Kind::Cyclotomic, n};
}

std::string Field::to_string() const {
  switch (kind) {
    case Kind::Rational: return "Q";
    case Kind::RatFunc: return "Q(q)";
    case Kind::Cyclotomic: return "Q(zeta_" + std::to_string(conductor) + ")";
  }
  return "?";
}

Field join(const Field& a, const Field& b) {
  using K = Field::Kind;
  if (a == b) return a;
  if (a.kind == K::Rational) return b;
  if (b.kind == K::Rational) return a;
  if (a.kind == K::Cyclotomic && b.kind == K::Cyclotomic) {
    int l = std::lcm(a.conductor, b.conductor);
    if (l > Cyclotomic::kMaxConductor && l % 4 == 2) l /= 2;
    if (l > Cyclotomic::kMaxConductor) throw FieldMismatch("no common field for " + a.to_string() + " and " + b.to_string());
    return Field::cyclotomic(l);
  }
  throw FieldMismatch("mixed fields " + a.to_string() + " and " + b.to_string());
}

Scalar Scalar::zero(const Field& f) {
  switch (f.kind) {
    case Field::Kind::Rational: return Rational();
    case Field::Kind::RatFunc: return RatFunc();
    case Field::Kind::Cyclotomic: return Cyclotomic(f.conductor);
  }
  return {};
}

Scalar Scalar::one(const Field& f) {
  switch (f.kind) {
    case Field::Kind::Rational: return Rational(1);
    case Field::Kind::RatFunc: return RatFunc(1);
    case Field::Kind::Cyclotomic: return Cyclotomic(Rational(1), f.conductor);
  }
  return {};
}

Field Scalar::field() const {
  if (std::holds_alternative<Rational>(v_)) return Field::rational();
  if (std::holds_alternative<RatFunc>(v_)) return Field::ratfunc();
  return Field::cyclotomic(std::get<Cyclotomic>(v_).conductor());
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool Scalar::is_one() const {
  return std::visit([](const auto& x) { return x.is_one(); }, v_);
}

const Rational& Scalar::as_rational() const {
  if (auto* p = std::get_if<Rational>(&v_)) return *p;
  throw FieldMismatch("expected a rational scalar, got " + field().to_string());
}

const RatFunc& Scalar::as_ratfunc() const {
  if (auto* p = std::get_if<RatFunc>(&v_)) return *p;
  throw FieldMismatch("expected a rational function scalar, got " + field().to_string());
}

const Cyclotomic& Scalar::as_cyclotomic() const {
  if (auto* p = std::get_if<Cyclotomic>(&v_)) return *p;
  throw FieldMismatch("expected a cyclotomic scalar, got " + field().to_string());
}

Scalar Scalar::to_field(const Field& f) const {
  Field mine = field();
  if (mine == f) return *this;
  if (auto* r = std::get_if<Rational>(&v_)) {
    switch (f.kind) {
      case Field::Kind::Rational: return *r;
      case Field::Kind::RatFunc: return RatFunc(*r);
      case Field::Kind::Cyclotomic: return Cyclotomic(*r, f.conductor);
    }
  }
  if (auto* c = std::get_if<Cyclotomic>(&v_)) {
    if (f.kind == Field::Kind::Cyclotomic) return c->embed(f.conductor);
    if (f.kind == Field::Kind::Rational && c->is_rational()) return c->rational_value();
    if (f.kind == Field::Kind::RatFunc && c->is_rational()) return RatFunc(c->rational_value());
  }
  if (auto* g = std::get_if<RatFunc>(&v_)) {
    if (g->is_constant()) return Scalar(g->constant()).to_field(f);
  }
  throw FieldMismatch("cannot move " + to_string() + " from " + mine.to_string() + " to " + f.to_string());
}

bool Scalar::is_rational_value() const {
  if (std::holds_alternative<Rational>(v_)) return true;
  if (auto* c = std::get_if<Cyclotomic>(&v_)) return c->is_rational();
  return std::get<RatFunc>(v_).is_constant();
}

Rational Scalar::rational_value() const {
  if (auto* r = std::get_if<Rational>(&v_)) return *r;
  if (auto* c = std::get_if<Cyclotomic>(&v_)) return c->rational_value();
  const auto& g = std::get<RatFunc>(v_);
  if (!g.is_constant()) throw InvalidArgument(g.to_string() + " is not a constant");
  return g.constant();
}

Scalar Scalar::conj() const {
  if (auto* c = std::get_if<Cyclotomic>(&v_)) return c->conj();
  return *this;
}

Scalar Scalar::inverse() const {
  return std::visit([](const auto& x) -> Scalar { return x.inverse(); }, v_);
}

Scalar Scalar::pow(long e) const {
  return std::visit([e](const auto& x) -> Scalar { return x.pow(e); }, v_);
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& x) -> Scalar { return -x; }, v_);
}

namespace {

template <class Op>
Scalar binary(const Scalar& a, const Scalar& b, Op op) {
  if (a.value().index() == b.value().index() &&
      (!std::holds_alternative<Cyclotomic>(a.value()) ||
       a.as_cyclotomic().conductor() == b.as_cyclotomic().conductor())) {
    return std::visit(
        [&](const auto& x) -> Scalar {
          using T = std::decay_t<decltype(x)>;
          return op(x, std::get<T>(b.value()));
        },
        a.value());
  }
  Field f = join(a.field(), b.field());
  Scalar x = a.to_field(f), y = b.to_field(f);
  return std::visit(
      [&](const auto& u) -> Scalar {
        using T = std::decay_t<decltype(u)>;
        return op(u, std::get<T>(y.value()));
      },
      x.value());
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x / y; });
}

bool operator==(const Scalar& a, const Scalar& b) {
  Field f;
  try {
    f = join(a.field(), b.field());
  } catch (const FieldMismatch&) {
    return false;
  }
  try {
    Scalar x = a.to_field(f), y = b.to_field(f);
    return x.value() == y.value();
  } catch (const FieldMismatch&) {
    return false;
  }
}

std::string Scalar::to_string() const {
  return std::visit([](const auto& x) { return x.to_string(); }, v_);
}

Rational specialize_q(const Scalar& s, const Rational& c) {
  if (c.is_zero()) throw InvalidArgument("specialization at q = 0");
  if (auto* r = std::get_if<Rational>(&s.value())) return *r;
  if (auto* g = std::get_if<RatFunc>(&s.value())) return g->eval(c);
  throw FieldMismatch("specialize_q expects a rational function, got " + s.field().to_string());
}

}  // namespace heckeforge::exact

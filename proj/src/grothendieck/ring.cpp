#include "heckeforge/grothendieck/ring.hpp"

#include "heckeforge/error.hpp"

namespace heckeforge::grothendieck {

using segments::Rational;
using Kind = ProductVerdict::Kind;
using Rule = ProductVerdict::Rule;

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Irreducible: return "Irreducible";
    case Kind::Reducible: return "Reducible";
    case Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::TrivialFactor: return "TrivialFactor";
    case Rule::NonAligned: return "NonAligned";
    case Rule::UnitaryU0: return "UnitaryU0";
    case Rule::ReducibilityPoint: return "ReducibilityPoint";
  }
  return "";
}

namespace {

bool asserted_unitary(const LineRegistry& reg, const Multisegment& d, const UnitaryNames& unitary) {
  if (!unitary.count(d)) return false;
  if (!segments::is_hermitian(reg, d))
    throw InvalidArgument("multisegment " + d.to_string() + " is asserted unitary but is not Hermitian");
  return true;
}

ProductVerdict irreducible(const Multisegment& a, const Multisegment& b, Rule r) {
  return {Kind::Irreducible, r, a + b};
}

}  // namespace

ProductVerdict classify_product(const LineRegistry& reg, const Multisegment& a, const Multisegment& b,
                                const UnitaryNames& unitary) {
  for (const auto* d : {&a, &b})
    for (const auto& s : d->segments()) reg.get(s.line);
  if (a.empty() || b.empty()) return irreducible(a, b, Rule::TrivialFactor);

  bool ua = asserted_unitary(reg, a, unitary);
  bool ub = asserted_unitary(reg, b, unitary);

  std::map<std::string, Multisegment> pa, pb;
  for (const auto& blk : segments::partition_by_lines(a)) pa[blk.segments().front().line] = blk;
  for (const auto& blk : segments::partition_by_lines(b)) pb[blk.segments().front().line] = blk;
  bool shared = false, resolved = true;
  for (const auto& [line, blk] : pa) {
    auto it = pb.find(line);
    if (it == pb.end()) continue;
    shared = true;
    if (!(asserted_unitary(reg, blk, unitary) && asserted_unitary(reg, it->second, unitary))) resolved = false;
  }
  if (!shared) return irreducible(a, b, Rule::NonAligned);
  if (ua && ub) return irreducible(a, b, Rule::UnitaryU0);
  // Aligned line blocks whose pairwise products are unitary, hence irreducible.
  if (resolved) return irreducible(a, b, Rule::NonAligned);

  if (a.size() == 1 && b.size() == 1) {
    const auto& s = a.segments().front();
    const auto& t = b.segments().front();
    if (s.n == 1 && t.n == 1 && s.line == t.line) {
      const auto& inv = reg.get(s.line);
      Rational gap = s.e - t.e;
      if (gap.sign() < 0) gap = -gap;
      if (gap == Rational(inv.f_residue, inv.n_torsion)) return {Kind::Reducible, Rule::ReducibilityPoint, std::nullopt};
    }
  }
  return {};
}

RingElement RingElement::basis(const Multisegment& d, long long coef) {
  RingElement x;
  x.add_term(d, coef);
  return x;
}

void RingElement::add_term(const Multisegment& d, long long coef) {
  if (coef == 0) return;
  auto [it, fresh] = terms_.emplace(d, coef);
  if (!fresh) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

long long RingElement::coeff(const Multisegment& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? 0 : it->second;
}

RingElement RingElement::operator+(const RingElement& o) const {
  RingElement x = *this;
  for (const auto& [d, c] : o.terms_) x.add_term(d, c);
  return x;
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + o.scaled(-1); }

RingElement RingElement::scaled(long long c) const {
  RingElement x;
  for (const auto& [d, v] : terms_) x.add_term(d, v * c);
  return x;
}

std::optional<long> RingElement::degree(const LineRegistry& reg) const {
  std::optional<long> deg;
  for (const auto& [d, c] : terms_) {
    long k = segments::degree(reg, d);
    if (deg && *deg != k) return std::nullopt;
    deg = k;
  }
  return deg ? deg : 0L;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [d, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c) + "*" + d.to_string();
  }
  return s;
}

ProductResult multiply(const LineRegistry& reg, const RingElement& x, const RingElement& y, const UnitaryNames& unitary) {
  ProductResult out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      auto v = classify_product(reg, a, b, unitary);
      if (v.kind == Kind::Irreducible) {
        out.value.add_term(*v.result, ca * cb);
      } else {
        out.pending.push_back({a, b, ca * cb, v});
      }
    }
  return out;
}

std::map<PointMultiset, long long> supp_of_element(const LineRegistry& reg, const RingElement& x) {
  std::map<PointMultiset, long long> out;
  for (const auto& [d, c] : x.terms()) {
    auto& v = out[segments::support(reg, d)];
    v += c;
    if (v == 0) out.erase(segments::support(reg, d));
  }
  return out;
}

}  // namespace heckeforge::grothendieck

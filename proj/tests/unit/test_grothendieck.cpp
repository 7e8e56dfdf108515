#include <random>

#include "doctest.h"
#include "heckeforge/error.hpp"
#include "heckeforge/grothendieck/ring.hpp"

using namespace heckeforge;
using namespace heckeforge::grothendieck;
using segments::CuspidalInvariants;
using segments::Rational;
using segments::Segment;
using Kind = ProductVerdict::Kind;
using Rule = ProductVerdict::Rule;

namespace {

LineRegistry registry() {
  LineRegistry reg;
  reg.register_lines({{"A", 1, 1, 1, 1, "A", true},
                      {"B", 2, 2, 2, 4, "B", true},
                      {"C", 1, 1, 3, 2, "D", true},
                      {"D", 1, 1, 3, 2, "C", true}});
  return reg;
}

Multisegment random_on(std::mt19937_64& rng, const std::vector<std::string>& lines, int max_len = 3) {
  std::vector<Segment> v;
  int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len));
  for (int i = 0; i < len; ++i)
    v.push_back({lines[rng() % lines.size()], 1 + static_cast<int>(rng() % 3), Rational(static_cast<std::int64_t>(rng() % 9) - 4, 2)});
  return Multisegment(v);
}

}  // namespace

TEST_CASE("classify_product examples") {
  auto reg = registry();
  Multisegment a({{"A", 2, 1}}), b({{"B", 1, 0}});
  auto v = classify_product(reg, a, b);
  CHECK(v.kind == Kind::Irreducible);
  CHECK(v.rule == Rule::NonAligned);
  CHECK(v.result == a + b);

  auto red = classify_product(reg, Multisegment({{"A", 1, 0}}), Multisegment({{"A", 1, 1}}));
  CHECK(red.kind == Kind::Reducible);
  CHECK(red.rule == Rule::ReducibilityPoint);
  CHECK_FALSE(red.result);
  CHECK(classify_product(reg, Multisegment({{"B", 1, 3}}), Multisegment({{"B", 1, 1}})).kind == Kind::Reducible);
  CHECK(classify_product(reg, Multisegment({{"C", 1, 0}}), Multisegment({{"C", 1, Rational(2, 3)}})).kind == Kind::Reducible);

  auto unk = classify_product(reg, Multisegment({{"A", 1, 0}}), Multisegment({{"A", 1, Rational(1, 2)}}));
  CHECK(unk.kind == Kind::Unknown);
  CHECK_FALSE(unk.rule);
  CHECK(classify_product(reg, Multisegment({{"A", 2, 0}}), Multisegment({{"A", 1, 1}})).kind == Kind::Unknown);

  auto triv = classify_product(reg, Multisegment(), a);
  CHECK(triv.rule == Rule::TrivialFactor);
  CHECK(triv.result == a);
  CHECK_THROWS_AS(classify_product(reg, Multisegment({{"Z", 1, 0}}), a), RegistryError);
}

TEST_CASE("asserted unitary products") {
  auto reg = registry();
  Multisegment u({{"A", 1, Rational(1, 3)}, {"A", 1, Rational(-1, 3)}});
  Multisegment t({{"A", 2, 0}});
  UnitaryNames names{u, t};
  CHECK(classify_product(reg, u, t).kind == Kind::Unknown);
  auto v = classify_product(reg, u, t, names);
  CHECK(v.kind == Kind::Irreducible);
  CHECK(v.rule == Rule::UnitaryU0);
  CHECK(v.result == u + t);

  Multisegment bad({{"A", 1, 1}});
  CHECK_THROWS_AS(classify_product(reg, bad, t, UnitaryNames{bad, t}), InvalidArgument);

  // Aligned blocks resolved per line while the whole factors carry no assertion.
  Multisegment x = t + Multisegment({{"B", 1, 1}});
  Multisegment y = u + Multisegment({{"C", 1, 0}});
  auto w = classify_product(reg, x, y, names);
  CHECK(w.kind == Kind::Irreducible);
  CHECK(w.rule == Rule::NonAligned);
  CHECK(classify_product(reg, x, y).kind == Kind::Unknown);
}

TEST_CASE("classify_product is symmetric and sound") {
  auto reg = registry();
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    auto d = random_on(rng, {"A", "B", "C", "D"});
    auto e = random_on(rng, {"A", "B", "C", "D"});
    auto v = classify_product(reg, d, e), w = classify_product(reg, e, d);
    CHECK(v == w);
    if (v.kind == Kind::Irreducible) CHECK(segments::degree(reg, *v.result) == segments::degree(reg, d) + segments::degree(reg, e));
  }
  for (int i = 0; i < 100; ++i) {
    auto d = random_on(rng, {"A"});
    auto v = classify_product(reg, d, segments::dagger(reg, d));
    CHECK_FALSE(v.rule == Rule::NonAligned);
  }
}

TEST_CASE("ring elements") {
  auto reg = registry();
  Multisegment a({{"A", 1, 0}}), b({{"B", 1, 0}});
  auto x = RingElement::basis(a, 2) + RingElement::basis(b, -1);
  CHECK(x.coeff(a) == 2);
  CHECK((x - x).is_zero());
  CHECK(x.scaled(0).is_zero());
  CHECK_FALSE(x.degree(reg));
  CHECK(RingElement::basis(a).degree(reg) == 1);

  auto s = supp_of_element(reg, RingElement::basis(a, 2));
  REQUIRE(s.size() == 1);
  CHECK(s.begin()->second == 2);
  CHECK(s.begin()->first == segments::support(reg, a));
}

TEST_CASE("multiply") {
  auto reg = registry();
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    RingElement x, y;
    for (int k = 0; k < 3; ++k) {
      x.add_term(random_on(rng, {"A", "C"}), static_cast<long long>(rng() % 5) - 2);
      y.add_term(random_on(rng, {"B", "D"}), static_cast<long long>(rng() % 5) - 2);
    }
    auto xy = multiply(reg, x, y), yx = multiply(reg, y, x);
    CHECK(xy.pending.empty());
    CHECK(xy.value == yx.value);
    CHECK(multiply(reg, x, RingElement::one()).value == x);
    for (const auto& [d, c] : xy.value.terms()) {
      bool found = false;
      for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms())
          if (a + b == d) found = true;
      CHECK(found);
    }
  }
  auto p = multiply(reg, RingElement::basis(Multisegment({{"A", 1, 0}})), RingElement::basis(Multisegment({{"A", 1, 1}}), 3));
  CHECK(p.value.is_zero());
  REQUIRE(p.pending.size() == 1);
  CHECK(p.pending[0].coefficient == 3);
  CHECK(p.pending[0].verdict.kind == Kind::Reducible);
}

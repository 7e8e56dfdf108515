#include "doctest.h"
#include "heckeforge/error.hpp"
#include "heckeforge/hecke/bernstein.hpp"
#include "heckeforge/hecke/levi.hpp"
#include "support.hpp"

using namespace heckeforge;
using namespace heckeforge::hecke;
using exact::RatFunc;
using testsupport::draw;
using testsupport::random_element;
using testsupport::random_short;

namespace {

std::vector<HeckeAlgebra> algebras(int r) {
  return {HeckeAlgebra::generic(r), HeckeAlgebra::specialized(r, Rational(2)), HeckeAlgebra::specialized(r, Rational(3))};
}

std::vector<long> random_weight(std::mt19937_64& rng, int r, long b) {
  std::vector<long> v(static_cast<std::size_t>(r));
  for (auto& x : v) x = draw(rng, -b, b);
  return v;
}

}  // namespace

TEST_CASE("quadratic relation") {
  auto alg = HeckeAlgebra::generic(2);
  auto s = AffinePermutation::simple(2, 1);
  auto T = HeckeElement::basis(alg, s);
  HeckeElement expect(alg);
  Scalar q = alg.q();
  expect.add_term(s, q - Scalar(Rational(1)));
  expect.add_term(AffinePermutation::identity(2), q);
  CHECK(T * T == expect);
  auto T0 = HeckeElement::basis(alg, AffinePermutation::simple(2, 0));
  HeckeElement e0(alg);
  e0.add_term(AffinePermutation::simple(2, 0), q - Scalar(Rational(1)));
  e0.add_term(AffinePermutation::identity(2), q);
  CHECK(T0 * T0 == e0);
}

TEST_CASE("rotation shifts support") {
  std::mt19937_64 rng(7);
  for (int r = 1; r <= 4; ++r) {
    auto alg = HeckeAlgebra::specialized(r, Rational(2));
    auto pi = AffinePermutation::rotation(r);
    for (int t = 0; t < 20; ++t) {
      auto w = testsupport::random_affine(rng, r, 1);
      CHECK(HeckeElement::basis(alg, pi) * HeckeElement::basis(alg, w) == HeckeElement::basis(alg, pi * w));
      CHECK(HeckeElement::basis(alg, w) * HeckeElement::basis(alg, pi) == HeckeElement::basis(alg, w * pi));
    }
  }
}

TEST_CASE("product is associative") {
  std::mt19937_64 rng(11);
  for (int r = 2; r <= 4; ++r)
    for (const auto& alg : algebras(r))
      for (int t = 0; t < 6; ++t) {
        auto a = random_element(rng, alg), b = random_element(rng, alg), c = random_element(rng, alg);
        CHECK((a * b) * c == a * (b * c));
      }
}

TEST_CASE("products of different algebras are rejected") {
  auto a = HeckeElement::one(HeckeAlgebra::generic(2));
  auto b = HeckeElement::one(HeckeAlgebra::specialized(2, Rational(2)));
  CHECK_THROWS_AS(a * b, InvalidArgument);
}

TEST_CASE("basis inverses") {
  auto alg = HeckeAlgebra::generic(2);
  CHECK(invert_basis_element(alg, AffinePermutation::identity(2)) == HeckeElement::one(alg));
  auto s = AffinePermutation::simple(2, 1);
  HeckeElement expect(alg);
  Scalar qi = alg.q().inverse();
  expect.add_term(s, qi);
  expect.add_term(AffinePermutation::identity(2), qi - Scalar(Rational(1)));
  CHECK(invert_basis_element(alg, s) == expect);
  std::mt19937_64 rng(5);
  for (int r = 2; r <= 3; ++r)
    for (const auto& a : algebras(r))
      for (int t = 0; t < 8; ++t) {
        auto w = testsupport::random_affine(rng, r, 1);
        auto T = HeckeElement::basis(a, w);
        auto Ti = invert_basis_element(a, w);
        CHECK(T * Ti == HeckeElement::one(a));
        CHECK(Ti * T == HeckeElement::one(a));
      }
}

TEST_CASE("theta elements") {
  auto a2 = HeckeAlgebra::generic(2);
  CHECK(theta(a2, {0, 0}) == HeckeElement::one(a2));
  auto a1 = HeckeAlgebra::generic(1);
  CHECK(theta(a1, {1}) == HeckeElement::basis(a1, AffinePermutation::rotation(1)));
  CHECK(theta(a2, {1, 0}) * theta(a2, {0, 1}) == theta(a2, {1, 1}));
  CHECK(theta(a2, {1, 1}) == HeckeElement::basis(a2, AffinePermutation::translation({1, 1})));
  CHECK(theta(a2, {1, 0}) == HeckeElement::basis(a2, AffinePermutation::translation({1, 0})));
  // Independent of the dominant decomposition.
  auto a3 = HeckeAlgebra::specialized(3, Rational(3));
  CHECK(theta_via(a3, {0, 1, -1}, {1, 0, 0}) == theta_via(a3, {0, 1, -1}, {2, 1, 1}));
  CHECK(theta_via(a3, {-1, 2, 0}, {3, 0, 0}) == theta(a3, {-1, 2, 0}));
  CHECK_THROWS_AS(theta_via(a3, {0, 1, 0}, {0, 0, 0}), InvalidArgument);
}

TEST_CASE("theta elements multiply like a Laurent ring") {
  std::mt19937_64 rng(13);
  for (int r = 2; r <= 3; ++r)
    for (const auto& alg : algebras(r))
      for (int t = 0; t < 4; ++t) {
        auto l = random_weight(rng, r, 1), k = random_weight(rng, r, 1);
        std::vector<long> s(l.size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = l[i] + k[i];
        CHECK(theta(alg, l) * theta(alg, k) == theta(alg, s));
        CHECK(theta(alg, l) * theta(alg, k) == theta(alg, k) * theta(alg, l));
      }
}

TEST_CASE("Bernstein relation matches normal-form products") {
  std::mt19937_64 rng(17);
  for (int r = 2; r <= 3; ++r)
    for (const auto& alg : algebras(r))
      for (int t = 0; t < 6; ++t) {
        auto lam = random_weight(rng, r, 2);
        auto b = BernsteinElement::term(alg, lam, AffinePermutation::identity(r));
        for (int i = 0; i < r; ++i) {
          auto lhs = from_bernstein(b.left_mul_simple(i));
          auto rhs = HeckeElement::basis(alg, AffinePermutation::simple(r, i)) * theta(alg, lam);
          CHECK(lhs == rhs);
        }
        auto lhs = from_bernstein(b.left_mul_rotation(1));
        CHECK(lhs == HeckeElement::basis(alg, AffinePermutation::rotation(r)) * theta(alg, lam));
      }
}

TEST_CASE("Bernstein form round trip") {
  std::mt19937_64 rng(19);
  for (int r = 1; r <= 3; ++r)
    for (const auto& alg : algebras(r))
      for (int t = 0; t < 4; ++t) {
        auto x = random_element(rng, alg);
        CHECK(from_bernstein(to_bernstein(x)) == x);
      }
}

TEST_CASE("star is an anti-involution") {
  auto alg = HeckeAlgebra::specialized(3, Rational(2), 8);
  auto s = AffinePermutation::simple(3, 2);
  CHECK(star(HeckeElement::basis(alg, s)) == HeckeElement::basis(alg, s));
  auto pi = AffinePermutation::rotation(3);
  CHECK(star(HeckeElement::basis(alg, pi)) == HeckeElement::basis(alg, pi.inverse()));
  CHECK(star(HeckeElement::basis(alg, pi)) == invert_basis_element(alg, pi));
  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    auto a = random_element(rng, alg), b = random_element(rng, alg);
    a = a + HeckeElement::basis(alg, AffinePermutation::identity(3), Scalar(exact::Cyclotomic::zeta(8, 1)));
    CHECK(star(a * b) == star(b) * star(a));
    CHECK(star(star(a)) == a);
  }
}

TEST_CASE("specialization of elements") {
  auto alg = HeckeAlgebra::generic(2);
  auto e = HeckeElement::one(alg);
  CHECK(specialize(e, Rational(5)) == HeckeElement::one(HeckeAlgebra::specialized(2, Rational(5))));
  auto T = HeckeElement::basis(alg, AffinePermutation::simple(2, 1));
  auto a1 = HeckeAlgebra::specialized(2, Rational(1));
  CHECK(specialize(T * T, Rational(1)) == HeckeElement::one(a1));
  CHECK_THROWS_AS(HeckeAlgebra::specialized(2, Rational(0)), InvalidArgument);
}

TEST_CASE("Levi embedding") {
  auto alg = HeckeAlgebra::generic(2);
  LeviAlgebra l(alg, LeviShape({1, 1}));
  CHECK(levi_embed(l, LeviElement::one(l)) == HeckeElement::one(alg));
  auto th = LeviElement::tensor(l, {HeckeElement::basis(l.factor(0), AffinePermutation::rotation(1)),
                                    HeckeElement::one(l.factor(1))});
  CHECK(levi_embed(l, th) == theta(alg, {1, 0}));
  auto th2 = LeviElement::tensor(l, {HeckeElement::one(l.factor(0)),
                                     HeckeElement::basis(l.factor(1), AffinePermutation::rotation(1))});
  CHECK(levi_embed(l, th2) == theta(alg, {0, 1}));

  LeviAlgebra l3(HeckeAlgebra::specialized(3, Rational(2)), LeviShape({1, 2}));
  auto t1 = LeviElement::tensor(l3, {HeckeElement::one(l3.factor(0)),
                                     HeckeElement::basis(l3.factor(1), AffinePermutation::simple(2, 1))});
  CHECK(levi_embed(l3, t1) == HeckeElement::basis(l3.ambient(), AffinePermutation::simple(3, 2)));
  CHECK_THROWS_AS(LeviAlgebra(alg, LeviShape({1, 2})), ShapeMismatch);
}

TEST_CASE("Levi embedding is multiplicative") {
  std::mt19937_64 rng(29);
  for (auto parts : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 1}, {1, 1, 1}})
    for (auto alg : {HeckeAlgebra::generic(3), HeckeAlgebra::specialized(3, Rational(2))}) {
      int r = 0;
      for (int p : parts) r += p;
      alg = alg.with_rank(r);
      LeviAlgebra l(alg, LeviShape(parts));
      for (int t = 0; t < 3; ++t) {
        std::vector<HeckeElement> fa, fb;
        for (std::size_t k = 0; k < l.size(); ++k) {
          fa.push_back(random_element(rng, l.factor(k), 1, 2));
          fb.push_back(random_element(rng, l.factor(k), 2, 2));
        }
        auto a = LeviElement::tensor(l, fa), b = LeviElement::tensor(l, fb);
        CHECK(levi_embed(l, a * b) == levi_embed(l, a) * levi_embed(l, b));
      }
    }
}

#include "doctest.h"
#include "heckeforge/error.hpp"
#include "heckeforge/hecke/irreducibility.hpp"
#include "heckeforge/hecke/unitarity.hpp"
#include "support.hpp"

using namespace heckeforge;
using namespace heckeforge::hecke;
using exact::Cyclotomic;
using exact::RatFunc;
using Irr = IrreducibilityVerdict::Kind;
using Uni = UnitarityVerdict::Kind;

namespace {

Scalar R(long p, long q = 1) { return Scalar(Rational(p, q)); }
Scalar Z(int n, long k) { return Scalar(Cyclotomic::zeta(n, k)); }

void check_witness(const HModule& m, const IrreducibilityVerdict& v) {
  REQUIRE(v.witness);
  CHECK(v.witness->rows() > 0);
  CHECK(v.witness->rows() < m.dim());
  CHECK(exact::is_invariant(*v.witness, m.closure_generators()));
}

}  // namespace

TEST_CASE("irreducibility examples") {
  auto a2 = HeckeAlgebra::specialized(2, Rational(2));
  CHECK(is_irreducible(HModule::character(a2, a2.q(), R(1)), 1).kind == Irr::Irreducible);

  auto red = principal_series(a2, {R(2), R(1)});
  auto v = is_irreducible(red, 1);
  CHECK(v.kind == Irr::Reducible);
  check_witness(red, v);
  CHECK(v.witness->rows() == 1);

  CHECK(is_irreducible(principal_series(a2, {R(8), R(1)}), 1).kind == Irr::Irreducible);
  CHECK(is_irreducible(principal_series(a2, {R(1), R(2)}), 1).kind == Irr::Reducible);
  CHECK(is_irreducible(principal_series(a2, {R(1), R(1)}), 1).kind == Irr::Irreducible);

  auto a4 = HeckeAlgebra::specialized(2, Rational(4));
  CHECK(is_irreducible(principal_series(a4, {R(4), R(1)}), 3).kind == Irr::Reducible);

  auto a3 = HeckeAlgebra::specialized(2, Rational(3));
  CHECK(commutant_dim(principal_series(a3, {R(9), R(1)})) == 1);
  CHECK(commutant_dim(HModule::character(a3, a3.q(), R(1))) == 1);
}

TEST_CASE("direct sums are caught by the commutant") {
  auto alg = HeckeAlgebra::generic(2);
  auto s = direct_sum(HModule::character(alg, alg.q(), R(1)), HModule::character(alg, R(-1), R(1)));
  CHECK(commutant_dim(s) == 2);
  auto v = is_irreducible(s, 5);
  CHECK(v.kind == Irr::Reducible);
  CHECK(v.method == "commutant");
  check_witness(s, v);

  auto a2 = HeckeAlgebra::specialized(2, Rational(2));
  auto t = direct_sum(HModule::character(a2, a2.q(), R(1)), HModule::character(a2, R(-1), R(1)));
  auto w = is_irreducible(t, 5);
  CHECK(w.kind == Irr::Reducible);
  CHECK(w.method == "theta-weight");
  check_witness(t, w);
}

TEST_CASE("generic q uses deterministic tiers only") {
  auto g = HeckeAlgebra::generic(2);
  CHECK(is_irreducible(principal_series(g, {R(5), R(1)}), 1).kind == Irr::Irreducible);
  auto s = direct_sum(HModule::character(g, g.q(), R(1)), HModule::character(g, R(-1), R(1)));
  CHECK(is_irreducible(s, 1).kind == Irr::Reducible);
  // Non-split reducible module: nothing but the randomized path could decide.
  auto nonsplit = principal_series(g, {Scalar(RatFunc::q()), R(1)});
  CHECK(commutant_dim(nonsplit) == 1);
  CHECK_THROWS_AS(is_irreducible(nonsplit, 1), UnsupportedField);
}

TEST_CASE("randomized and theta tiers agree with the reducibility rule") {
  // Reducible iff some ratio z_i / z_j equals q.
  auto alg = HeckeAlgebra::specialized(3, Rational(2));
  struct Case {
    std::vector<Scalar> z;
    bool reducible;
  };
  std::vector<Case> cases{{{R(1), R(3), R(9)}, false}, {{R(4), R(2), R(7)}, true}, {{R(1), R(5), R(2)}, true},
                          {{R(1), R(1), R(1)}, false}, {{R(1, 3), R(5), R(2, 3)}, true}, {{R(1, 3), R(5), R(3, 2)}, false}};
  for (const auto& c : cases) {
    auto m = principal_series(alg, c.z);
    for (std::uint64_t seed : {1u, 2u, 99u}) {
      auto v = is_irreducible(m, seed);
      CHECK(v.kind == (c.reducible ? Irr::Reducible : Irr::Irreducible));
      if (v.kind == Irr::Reducible) check_witness(m, v);
      CHECK(is_irreducible(m, seed).method == v.method);
    }
  }
}

TEST_CASE("cyclotomic principal series") {
  auto alg = HeckeAlgebra::specialized(3, Rational(2), 8);
  auto m = principal_series(alg, {Z(8, 1), Z(8, 3), R(1)});
  auto v = is_irreducible(m, 1);
  CHECK(v.kind == Irr::Irreducible);
  auto red = principal_series(alg, {Z(8, 1) * R(2), Z(8, 1), R(1)});
  auto w = is_irreducible(red, 1);
  CHECK(w.kind == Irr::Reducible);
  check_witness(red, w);
}

TEST_CASE("unitarity examples") {
  auto a2 = HeckeAlgebra::specialized(2, Rational(2));
  auto triv = is_unitary(HModule::character(a2, a2.q(), R(1)));
  CHECK(triv.kind == Uni::Unitary);
  CHECK(triv.form_space_dim == 1);

  auto c4 = HeckeAlgebra::specialized(2, Rational(2), 4);
  CHECK(is_unitary(HModule::character(c4, R(-1), Z(4, 1))).kind == Uni::Unitary);
  auto bad = is_unitary(HModule::character(a2, a2.q(), R(2)));
  CHECK(bad.kind == Uni::NotUnitary);
  CHECK(bad.reason == "no invariant form");

  auto ps = is_unitary(principal_series(a2, {R(3), R(1, 3)}));
  CHECK(ps.kind == Uni::NotUnitary);
  CHECK(is_unitary(principal_series(a2, {R(1), R(1)})).kind == Uni::Unitary);
  CHECK(is_unitary(principal_series(a2, {R(4, 3), R(3, 4)})).kind == Uni::Unitary);
  CHECK(is_unitary(principal_series(a2, {R(3, 2), R(2, 3)})).kind == Uni::NotUnitary);
  CHECK_THROWS_AS(is_unitary(principal_series(HeckeAlgebra::generic(2), {R(1), R(1)})), UnsupportedField);
}

TEST_CASE("unitary Gram matrices are invariant") {
  auto alg = HeckeAlgebra::specialized(3, Rational(2), 8);
  auto m = principal_series(alg, {Z(8, 1), Z(8, 2), Z(8, 7)});
  auto v = is_unitary(m);
  REQUIRE(v.kind == Uni::Unitary);
  const Matrix& s = *v.gram;
  CHECK(s.is_hermitian());
  for (const auto& a : m.generators()) CHECK(a * s == s * a.conj_transpose());
}

TEST_CASE("unitarity is invariant under unit rotation twists") {
  auto alg = HeckeAlgebra::specialized(2, Rational(2), 8);
  for (auto z : {std::vector<Scalar>{R(1), R(1)}, std::vector<Scalar>{R(3), R(1, 3)}, std::vector<Scalar>{Z(8, 1), Z(8, 5)}}) {
    auto m = principal_series(alg, z);
    auto base = is_unitary(m).kind;
    for (long k = 0; k < 8; ++k) CHECK(is_unitary(twist_rotation(m, Z(8, k))).kind == base);
  }
}

TEST_CASE("two-dimensional form spaces") {
  auto alg = HeckeAlgebra::specialized(2, Rational(3));
  auto a = HModule::character(alg, alg.q(), R(1));
  auto b = HModule::character(alg, R(-1), R(-1));
  auto v = is_unitary(direct_sum(a, b));
  CHECK(v.form_space_dim == 2);
  CHECK(v.kind == Uni::Unitary);
  auto w = is_unitary(direct_sum(a, a));
  CHECK(w.form_space_dim == 3);
  CHECK(w.kind == Uni::Inconclusive);
  auto half = is_unitary(direct_sum(a, HModule::character(alg, alg.q(), R(2))));
  CHECK(half.kind == Uni::NotUnitary);
}

TEST_CASE("Levi module unitarity") {
  auto alg = HeckeAlgebra::specialized(3, Rational(2), 8);
  LeviAlgebra l(alg, LeviShape({1, 2}));
  auto good = LeviModule::tensor(l, {HModule::character(l.factor(0), alg.q(), Z(8, 2)), HModule::character(l.factor(1), R(-1), R(1))});
  CHECK(is_unitary(good).kind == Uni::Unitary);
  auto bad = LeviModule::tensor(l, {HModule::character(l.factor(0), alg.q(), R(2)), HModule::character(l.factor(1), R(-1), R(1))});
  CHECK(is_unitary(bad).kind == Uni::NotUnitary);
  auto m = induce(good);
  CHECK(m.dim() == 3);
  CHECK(is_irreducible(m, 4).kind == Irr::Irreducible);
}

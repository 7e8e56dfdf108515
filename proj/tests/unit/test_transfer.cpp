#include "doctest.h"
#include "heckeforge/error.hpp"
#include "heckeforge/io/json.hpp"
#include "heckeforge/transfer/transfer.hpp"

using namespace heckeforge;
using namespace heckeforge::transfer;
using Irr = hecke::IrreducibilityVerdict::Kind;

namespace {

TransferContext ctx(int f, int n, std::int64_t qf, int r = 2) {
  TransferContext c;
  c.invariants = {"rho", 1, std::max(1, f / n), n, f, "rho", true};
  c.r = r;
  c.q_F = Rational(qf);
  return c;
}

}  // namespace

TEST_CASE("parameters") {
  CHECK(hecke_parameters(ctx(1, 1, 3)).q == Rational(3));
  CHECK(hecke_parameters(ctx(4, 1, 3)).q == Rational(81));
  for (int r = 1; r <= 4; ++r) CHECK(hecke_parameters(ctx(2, 1, 2, r)).r == r);
  CHECK_THROWS_AS(hecke_parameters(ctx(1, 1, 6)), InvalidArgument);
  CHECK_THROWS_AS(hecke_parameters(ctx(1, 1, 1)), InvalidArgument);
  CHECK_NOTHROW(hecke_parameters(ctx(1, 1, 9)));
}

TEST_CASE("twist values") {
  CHECK(twist_value(ctx(1, 1, 3), Rational(0)) == Rational(1));
  CHECK(twist_value(ctx(2, 2, 3), Rational(2)) == Rational(1, 81));
  CHECK(twist_value(ctx(1, 1, 2), Rational(1)) == Rational(1, 2));
  CHECK(twist_value(ctx(1, 2, 2), Rational(-1, 2)) == Rational(2));
  CHECK_THROWS_AS(twist_value(ctx(1, 1, 2), Rational(1, 2)), InvalidArgument);
}

TEST_CASE("reducibility points") {
  CHECK(reducibility_points(ctx(1, 1, 2)) == std::pair{Rational(1), Rational(-1)});
  CHECK(reducibility_points(ctx(4, 2, 2)) == std::pair{Rational(2), Rational(-2)});
  auto p = reducibility_points(ctx(2, 3, 2));
  CHECK(p.first == -p.second);
}

TEST_CASE("cuspidal pair") {
  auto c = ctx(1, 1, 2);
  CHECK(verify_cuspidal_pair(c, Rational(1), 1).verdict.kind == Irr::Reducible);
  CHECK(verify_cuspidal_pair(c, Rational(-1), 1).verdict.kind == Irr::Reducible);
  CHECK(verify_cuspidal_pair(c, Rational(3), 1).verdict.kind == Irr::Irreducible);
  for (int s = -3; s <= 3; ++s) {
    auto a = verify_cuspidal_pair(c, Rational(s), 5), b = verify_cuspidal_pair(c, Rational(-s), 5);
    CHECK(a.verdict.kind == b.verdict.kind);
    CHECK_FALSE(a.counterexample);
  }
  auto c2 = ctx(2, 2, 3);
  for (int k = -6; k <= 6; ++k) {
    auto rep = verify_cuspidal_pair(c2, Rational(k, 2), 3);
    CHECK_FALSE(rep.counterexample);
    CHECK((rep.verdict.kind == Irr::Reducible) == (k == 2 || k == -2));
  }
  CHECK_THROWS_AS(verify_cuspidal_pair(ctx(1, 1, 2, 3), Rational(1), 1), InvalidArgument);
}

TEST_CASE("S0 examples") {
  auto c = ctx(1, 1, 2);
  CharacterSpec triv;
  auto rep = verify_S0(c, {1, 1}, {triv, triv}, 1);
  CHECK(rep.hypothesis_met);
  CHECK(rep.induced_dim == 2);
  REQUIRE(rep.verdict);
  CHECK(rep.verdict->kind == Irr::Irreducible);
  CHECK_FALSE(rep.counterexample);

  auto c3 = ctx(1, 1, 2, 3);
  CharacterSpec i{false, 4, 1, Rational(1)};
  CharacterSpec st{true, 1, 0, Rational(1)};
  auto r3 = verify_S0(c3, {1, 2}, {i, st}, 2);
  CHECK(r3.induced_dim == 3);
  REQUIRE(r3.verdict);
  CHECK(r3.verdict->kind == Irr::Irreducible);

  CharacterSpec two{false, 1, 0, Rational(2)};
  auto bad = verify_S0(c, {1, 1}, {two, triv}, 1);
  CHECK_FALSE(bad.hypothesis_met);
  CHECK_FALSE(bad.verdict);
  CHECK_FALSE(bad.counterexample);
  CHECK(io::to_json(bad)["status"] == "hypothesis not met");

  CHECK_THROWS_AS(verify_S0(c, {1, 1}, {triv}, 1), InvalidArgument);
}

TEST_CASE("S0 reports induced dimension") {
  auto c = ctx(1, 1, 3, 4);
  CharacterSpec z8{false, 8, 3, Rational(1)};
  CharacterSpec st{true, 8, 5, Rational(1)};
  auto rep = verify_S0(c, {2, 2}, {z8, st}, 4);
  CHECK(rep.induced_dim == 6);
  CHECK(rep.hypothesis_met);
  CHECK(rep.verdict->kind == Irr::Irreducible);
}

TEST_CASE("character strings") {
  auto c = io::character_from_string("-1:zeta8^3");
  CHECK(c.steinberg);
  CHECK(c.conductor == 8);
  CHECK(c.k == 3);
  auto d = io::character_from_string("q:2/3*zeta4^1");
  CHECK(d.scale == Rational(2, 3));
  CHECK(io::character_from_string("q:1").conductor == 1);
  CHECK_THROWS_AS(io::character_from_string("x:1"), InvalidArgument);
  CHECK_THROWS_AS(io::character_from_string("q:zeta17^1"), InvalidArgument);
  CHECK(point_seed(1, 0) != point_seed(1, 1));
  CHECK(point_seed(1, 7) == point_seed(1, 7));
}

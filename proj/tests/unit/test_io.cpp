#include "doctest.h"
#include "heckeforge/error.hpp"
#include "heckeforge/io/json.hpp"

using namespace heckeforge;
using namespace heckeforge::io;
using exact::Cyclotomic;
using exact::Field;
using exact::RatFunc;

TEST_CASE("scalar round trip") {
  std::vector<Scalar> xs{Scalar(Rational(-3, 7)), Scalar(Rational(5)), Scalar(Cyclotomic::zeta(8, 3)),
                         Scalar(RatFunc::q() * RatFunc::q() + RatFunc(Rational(1, 2))),
                         Scalar(RatFunc::q()).inverse()};
  for (const auto& x : xs) CHECK(scalar_from_json(to_json(x), "$") == x);
  CHECK(to_json(Scalar(Rational(-3, 7))) == "-3/7");
  CHECK(scalar_from_json(json{{"zeta", 4}, {"power", 1}, {"scale", "2"}}, "$") == Scalar(Rational(2)) * Scalar(Cyclotomic::zeta(4, 1)));
  CHECK_THROWS_AS(scalar_from_json(json(1.5), "$"), SchemaError);
  CHECK_THROWS_AS(scalar_from_json(json("1/0"), "$"), SchemaError);
  CHECK_THROWS_AS(scalar_from_json(json{{"zeta", 17}, {"power", 1}}, "$"), SchemaError);
}

TEST_CASE("line schema") {
  json good = json::parse(R"({"label":"A","k":1,"b":2,"n_torsion":2,"f_residue":4,"dagger_label":"A","unitary_base":true})");
  auto l = line_from_json(good, "$");
  CHECK(to_json(l) == good);
  auto bad = good;
  bad["k"] = 0;
  CHECK_THROWS_WITH_AS(line_from_json(bad, "$.lines[0]"), "$.lines[0].k: expected a positive integer", SchemaError);
  bad = good;
  bad.erase("dagger_label");
  CHECK_THROWS_AS(line_from_json(bad, "$"), SchemaError);
  bad = good;
  bad["unitary_base"] = 1;
  CHECK_THROWS_AS(line_from_json(bad, "$"), SchemaError);
}

TEST_CASE("segments schema") {
  auto d = multisegment_from_json(json::parse(R"([{"line":"A","n":2,"e":"1/2"},{"line":"B","n":1,"e":0}])"), "$");
  CHECK(d.size() == 2);
  CHECK(multisegment_from_json(to_json(d), "$") == d);
  CHECK_THROWS_AS(multisegment_from_json(json::parse(R"([{"line":"A","n":0,"e":"0"}])"), "$"), SchemaError);
  CHECK_THROWS_AS(multisegment_from_json(json::parse(R"([{"line":"A","n":1,"e":0.5}])"), "$"), SchemaError);
}

TEST_CASE("hecke element round trip") {
  auto alg = algebra_from_json(json{{"rank", 3}, {"q", "2"}}, std::nullopt, "$");
  CHECK_FALSE(alg.is_generic());
  auto gen = algebra_from_json(json{{"rank", 2}}, std::nullopt, "$");
  CHECK(gen.is_generic());
  CHECK(algebra_from_json(json{{"rank", 2}, {"q", "3"}}, std::string("generic"), "$").is_generic());
  auto x = element_from_json(alg, json::parse(R"([{"word":[1,2],"rotation":1,"coef":"2/3"},{"window":[3,1,2]}])"), "$");
  CHECK(x.terms().size() == 2);
  CHECK(element_from_json(alg, to_json(x), "$") == x);
  CHECK_THROWS_AS(element_from_json(alg, json::parse(R"([{"word":[3]}])"), "$"), SchemaError);
  CHECK_THROWS_AS(element_from_json(alg, json::parse(R"([{"window":[1,1,2]}])"), "$"), SchemaError);
}

TEST_CASE("module descriptions") {
  auto alg = algebra_from_json(json{{"rank", 2}, {"q", 2}, {"conductor", 4}}, std::nullopt, "$");
  auto m = module_from_json(alg, json::parse(R"({"principal_series":["2","1"]})"), "$");
  CHECK(m.dim() == 2);
  auto c = module_from_json(alg, json::parse(R"({"character":{"T":"-1","rot":{"zeta":4,"power":1}}})"), "$");
  CHECK(c.dim() == 1);
  auto ind = module_from_json(
      alg, json::parse(R"({"induced":{"shape":[1,1],"factors":[{"character":{"T":"q","rot":1}},{"character":{"T":"q","rot":1}}]}})"), "$");
  CHECK(ind.dim() == 2);
  auto fin = module_from_json(alg, json::parse(R"({"finite":[[["2"]]],"rotation":[["1"]]})"), "$");
  CHECK(fin.dim() == 1);
  CHECK_THROWS_AS(module_from_json(alg, json::parse(R"({"finite":[[["3"]]],"rotation":[["1"]]})"), "$"), SchemaError);
  CHECK_THROWS_AS(module_from_json(alg, json::parse(R"({"bogus":1})"), "$"), SchemaError);
  auto j = to_json(m);
  CHECK(j["dim"] == 2);
}

TEST_CASE("context schema") {
  auto c = context_from_json(json::parse(R"({"f_residue":4,"n_torsion":2,"q_F":3,"r":2})"), "$");
  CHECK(c.invariants.f_residue == 4);
  CHECK(c.q_F == Rational(3));
  CHECK_THROWS_AS(context_from_json(json::parse(R"({"f_residue":4,"n_torsion":2,"q_F":6})"), "$"), SchemaError);
}

#include <map>

#include "doctest.h"
#include "heckeforge/error.hpp"
#include "heckeforge/exact/matrix.hpp"
#include "support.hpp"

using namespace heckeforge;
using namespace heckeforge::exact;
using testsupport::draw;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7").to_string() == "-7");
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("x"), InvalidArgument);
  Rational big = Rational(std::int64_t{1} << 40).pow(5);
  CHECK_FALSE(big.is_small());
  CHECK((big / big).is_one());
  CHECK((big * big.inverse()).is_small());
  CHECK(Rational(9, 4).sqrt_exact() == Rational(3, 2));
}

TEST_CASE("field axioms on seeded samples") {
  std::mt19937_64 rng(11);
  SUBCASE("rational") {
    for (int t = 0; t < 200; ++t) {
      Rational a = testsupport::random_rational(rng), b = testsupport::random_rational(rng),
               c = testsupport::random_rational(rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
  SUBCASE("ratfunc") {
    auto rnd = [&] {
      Poly n({testsupport::random_rational(rng), testsupport::random_rational(rng), Rational(draw(rng, 0, 2))});
      Poly d({Rational(draw(rng, 1, 3)), Rational(draw(rng, -2, 2))});
      return RatFunc(n, d);
    };
    for (int t = 0; t < 60; ++t) {
      RatFunc a = rnd(), b = rnd(), c = rnd();
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CHECK(a.den().leading().is_one());
    }
  }
  SUBCASE("cyclotomic") {
    for (int n : {3, 4, 5, 7, 8, 9, 12, 15, 16}) {
      for (int t = 0; t < 20; ++t) {
        Cyclotomic a = testsupport::random_cyclotomic(rng, n), b = testsupport::random_cyclotomic(rng, n),
                   c = testsupport::random_cyclotomic(rng, n);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      }
    }
  }
}

TEST_CASE("cyclotomic roots and square roots") {
  for (int n = 1; n <= 16; ++n) {
    CHECK(Cyclotomic::zeta(n, n).is_one());
    CHECK(static_cast<int>(Cyclotomic(n).coeffs().size()) == Cyclotomic::phi(n));
  }
  CHECK(Cyclotomic::phi(8) == 4);
  CHECK(Cyclotomic::phi(15) == 8);
  CHECK_THROWS_AS(Cyclotomic(17), UnsupportedField);
  auto s2 = Cyclotomic::sqrt_rational(Rational(2), 8);
  REQUIRE(s2);
  CHECK(*s2 * *s2 == Cyclotomic(Rational(2), 8));
  CHECK(s2->conj() == *s2);
  auto s3 = Cyclotomic::sqrt_rational(Rational(3), 12);
  REQUIRE(s3);
  CHECK(*s3 * *s3 == Cyclotomic(Rational(3), 12));
  CHECK(Cyclotomic::sqrt_rational(Rational(5), 5).has_value());
  CHECK_FALSE(Cyclotomic::sqrt_rational(Rational(2), 4).has_value());
  CHECK(Cyclotomic::sqrt_rational(Rational(-1), 4) == Cyclotomic::zeta(4, 1));
  // Q(zeta_4) embeds in Q(zeta_8) as zeta_8^2.
  CHECK(Cyclotomic::zeta(4, 1).embed(8) == Cyclotomic::zeta(8, 2));
  CHECK(Cyclotomic::zeta(3, 1).embed(6) * Cyclotomic::zeta(3, 2).embed(6) == Cyclotomic(Rational(1), 6));
}

TEST_CASE("mat_kernel examples") {
  CHECK(kernel(Matrix::identity(2, Field::rational())).rows() == 0);
  Matrix row = Matrix::from_rows({{Rational(1), Rational(1)}});
  Matrix k = kernel(row);
  REQUIRE(k.rows() == 1);
  CHECK(k.at(0, 0) + k.at(0, 1) == Scalar(Rational(0)));
  CHECK_FALSE(k.at(0, 0).is_zero());

  std::mt19937_64 rng(5);
  Matrix a = testsupport::random_rational_matrix(rng, 5, 3), b = testsupport::random_rational_matrix(rng, 3, 5);
  Matrix m = a * b;
  Matrix kk = kernel(m);
  CHECK(kk.rows() == 2);
  CHECK((m * kk.transpose()).is_zero());
  CHECK(rank(kk) == 2);
}

TEST_CASE("rank plus nullity equals columns") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = static_cast<std::size_t>(draw(rng, 1, 6)), c = static_cast<std::size_t>(draw(rng, 1, 6));
    std::size_t inner = static_cast<std::size_t>(draw(rng, 1, 6));
    Matrix m = testsupport::random_rational_matrix(rng, r, inner, 2) * testsupport::random_rational_matrix(rng, inner, c, 2);
    Matrix k = kernel(m);
    CHECK(rank(m) + k.rows() == c);
    if (k.rows()) CHECK((m * k.transpose()).is_zero());
  }
}

TEST_CASE("mixed fields in one matrix are rejected") {
  Matrix m(1, 2, Field::ratfunc());
  CHECK_THROWS_AS(m.set(0, 0, Cyclotomic::zeta(4, 1)), FieldMismatch);
  CHECK_THROWS_AS(Matrix::from_rows({{Scalar(RatFunc::q()), Scalar(Cyclotomic::zeta(4, 1))}}), FieldMismatch);
}

namespace {

// Independent count of solutions with entries in {-1, 0, 1}.
int grid_solutions_2x2(const std::vector<LinearConstraint>& cs) {
  int count = 0;
  for (int code = 0; code < 81; ++code) {
    int c = code;
    std::vector<std::vector<Scalar>> rows(2, std::vector<Scalar>(2));
    for (int i = 0; i < 4; ++i) {
      rows[static_cast<std::size_t>(i / 2)][static_cast<std::size_t>(i % 2)] = Rational(c % 3 - 1);
      c /= 3;
    }
    Matrix x = Matrix::from_rows(rows, Field::rational());
    bool ok = true;
    for (const auto& k : cs) ok = ok && (x * k.a == k.b * x);
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("solve_linear_subspace examples") {
  Matrix two = Matrix::scalar(3, Rational(2));
  CHECK(solve_linear_subspace({{two, two}}).size() == 9);
  Matrix d = Matrix::diagonal({Rational(1), Rational(2)});
  CHECK(solve_linear_subspace({{d, d}}).size() == 2);
  Matrix sw = Matrix::from_rows({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
  std::vector<LinearConstraint> cs{{d, d}, {sw, sw}};
  auto sol = solve_linear_subspace(cs);
  CHECK(sol.size() == 1);
  // 3^dim grid points lie in a subspace spanned by a 0/1 basis.
  CHECK(grid_solutions_2x2(cs) == 3);
  CHECK(solve_linear_subspace({{d, two}}).size() == 3);
  CHECK_THROWS_AS(solve_linear_subspace({{d, d}, {two, two}}), ShapeMismatch);
}

TEST_CASE("signature examples") {
  CHECK(signature(Matrix::identity(4, Field::rational())) == Signature{4, 0, 0});
  CHECK(signature(Matrix::diagonal({Rational(1), Rational(-1), Rational(0)})) == Signature{1, 1, 1});
  Matrix h = Matrix::from_rows({{Rational(2), Rational(1)}, {Rational(1), Rational(2)}});
  CHECK(signature(h) == Signature{2, 0, 0});
  auto cp = charpoly(h);
  CHECK(cp[0] == Scalar(Rational(3)));
  CHECK(cp[1] == Scalar(Rational(-4)));
  Matrix nh = Matrix::from_rows({{Rational(1), Rational(2)}, {Rational(0), Rational(1)}});
  CHECK_THROWS_AS(signature(nh), NotHermitian);
  // Hermitian over Q(i): [[2, i], [-i, 2]] has eigenvalues 1 and 3.
  Cyclotomic i = Cyclotomic::zeta(4, 1);
  Matrix hc = Matrix::from_rows({{Cyclotomic(Rational(2), 4), i}, {-i, Cyclotomic(Rational(2), 4)}});
  CHECK(signature(hc) == Signature{2, 0, 0});
  // [[0, z8], [z8^-1, 0]] has char poly x^2 - 1.
  Cyclotomic z = Cyclotomic::zeta(8, 1);
  Matrix hz = Matrix::from_rows({{Cyclotomic(8), z}, {z.conj(), Cyclotomic(8)}});
  CHECK(signature(hz) == Signature{1, 1, 0});
  // [[sqrt2, 0], [0, 1]] has an irrational char poly.
  Matrix hs = Matrix::diagonal({z + z.conj(), Cyclotomic(Rational(1), 8)});
  CHECK_THROWS_AS(signature(hs), UnsupportedField);
}

TEST_CASE("signature is invariant under congruence") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = static_cast<std::size_t>(draw(rng, 1, 5));
    Matrix a = testsupport::random_rational_matrix(rng, n, n, 3);
    Matrix h = a + a.transpose();
    Matrix p = testsupport::random_rational_matrix(rng, n, n, 3);
    if (rank(p) != n) continue;
    CHECK(signature(p.transpose() * h * p) == signature(h));
  }
  // Cyclotomic congruence with a rational P keeps the char poly rational here.
  Cyclotomic i = Cyclotomic::zeta(4, 1);
  Matrix hc = Matrix::from_rows({{Cyclotomic(Rational(3), 4), i}, {-i, Cyclotomic(Rational(-1), 4)}});
  Matrix p = Matrix::from_rows({{Rational(1), Rational(2)}, {Rational(0), Rational(1)}}).to_field(Field::cyclotomic(4));
  CHECK(signature(p.transpose() * hc * p.conj()) == signature(hc));
}

TEST_CASE("specialize_q examples") {
  RatFunc q = RatFunc::q();
  CHECK(specialize_q((q - RatFunc(1)) / (q + RatFunc(1)), Rational(3)) == Rational(1, 2));
  CHECK(specialize_q(q * q, Rational(2)) == Rational(4));
  CHECK_THROWS_AS(specialize_q(RatFunc(1) / (q - RatFunc(2)), Rational(2)), PoleError);
}

TEST_CASE("polynomial roots") {
  // (x - 1/2)(x + 3)(x^2 - 2)
  Poly p = (Poly::x() - Poly(Rational(1, 2))) * (Poly::x() + Poly(3)) * (Poly::x() * Poly::x() - Poly(2));
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rational(-3));
  CHECK(roots[1] == Rational(1, 2));
  CHECK(isolate_real_roots(p).size() == 4);
  auto sturm = sturm_sequence(p);
  CHECK(count_real_roots(sturm, Rational(0), Rational(2)) == 2);
}

TEST_CASE("inverse, determinant and span closure") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 10; ++t) {
    Matrix m = testsupport::random_rational_matrix(rng, 4, 4, 4);
    if (rank(m) < 4) {
      CHECK(det(m).is_zero());
      continue;
    }
    CHECK((m * inverse(m)).is_identity());
    CHECK_FALSE(det(m).is_zero());
  }
  Matrix g = Matrix::from_rows({{Rational(0), Rational(1), Rational(0)},
                                {Rational(0), Rational(0), Rational(1)},
                                {Rational(1), Rational(0), Rational(0)}});
  Matrix e1 = Matrix::row_vector({Rational(1), Rational(0), Rational(0)}, Field::rational());
  CHECK(span_closure(e1, {g}).rows() == 3);
  Matrix ones = Matrix::row_vector({Rational(1), Rational(1), Rational(1)}, Field::rational());
  Matrix sp = span_closure(ones, {g});
  CHECK(sp.rows() == 1);
  CHECK(is_invariant(sp, {g}));
  CHECK_FALSE(is_invariant(e1, {g}));
}

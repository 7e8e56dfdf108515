#pragma once

#include <cstdint>
#include <random>

#include "heckeforge/exact/matrix.hpp"

namespace testsupport {

using namespace heckeforge::exact;

inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational random_rational(std::mt19937_64& rng, int bound = 9) {
  return Rational(draw(rng, -bound, bound), draw(rng, 1, bound));
}

inline Matrix random_rational_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound = 5) {
  Matrix m(r, c, Field::rational());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Rational(draw(rng, -bound, bound)));
  return m;
}

inline Cyclotomic random_cyclotomic(std::mt19937_64& rng, int n) {
  std::vector<Rational> c;
  for (int k = 0; k < n; ++k) c.push_back(draw(rng, 0, 2) ? random_rational(rng, 4) : Rational());
  return Cyclotomic(c, n);
}

}  // namespace testsupport

#include <algorithm>

#include "heckeforge/weyl/affine_permutation.hpp"

namespace testsupport {

inline heckeforge::weyl::AffinePermutation random_affine(std::mt19937_64& rng, int r, long spread = 2) {
  std::vector<int> p(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  for (int i = r - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(draw(rng, 0, i))]);
  std::vector<long> l(static_cast<std::size_t>(r));
  for (auto& x : l) x = draw(rng, -spread, spread);
  return heckeforge::weyl::AffinePermutation(p, l);
}

// Affine inversions: pairs i in 1..r, j > i with u(i) > u(j).
inline long brute_force_length(const heckeforge::weyl::AffinePermutation& w) {
  long r = w.rank(), spread = 0;
  for (long x : w.lattice()) spread = std::max(spread, x < 0 ? -x : x);
  long count = 0;
  for (long i = 1; i <= r; ++i)
    for (long j = i + 1; j <= i + r * (2 * spread + 3); ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

}  // namespace testsupport

#include "heckeforge/hecke/algebra.hpp"

namespace testsupport {

// Word of at most maxlen random generators (with a random rotation power).
inline heckeforge::weyl::AffinePermutation random_short(std::mt19937_64& rng, int r, int maxlen = 4) {
  using heckeforge::weyl::AffinePermutation;
  auto w = AffinePermutation::identity(r);
  auto pi = AffinePermutation::rotation(r);
  long c = draw(rng, -1, 1);
  for (long k = 0; k < (c < 0 ? -c : c); ++k) w = w * (c > 0 ? pi : pi.inverse());
  if (r < 2) return w;
  long len = draw(rng, 0, maxlen);
  for (long k = 0; k < len; ++k) w = w * AffinePermutation::simple(r, static_cast<int>(draw(rng, 0, r - 1)));
  return w;
}

inline heckeforge::hecke::HeckeElement random_element(std::mt19937_64& rng, const heckeforge::hecke::HeckeAlgebra& alg,
                                                      int terms = 2, int maxlen = 3) {
  heckeforge::hecke::HeckeElement x(alg);
  for (int t = 0; t < terms; ++t) x.add_term(random_short(rng, alg.rank(), maxlen), Scalar(Rational(draw(rng, 1, 5))));
  return x;
}

}  // namespace testsupport

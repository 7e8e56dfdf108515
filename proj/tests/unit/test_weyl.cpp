#include <set>

#include "doctest.h"
#include "heckeforge/error.hpp"
#include "heckeforge/weyl/affine_permutation.hpp"
#include "support.hpp"

using namespace heckeforge;
using namespace heckeforge::weyl;
using testsupport::brute_force_length;
using testsupport::random_affine;

TEST_CASE("length examples") {
  CHECK(AffinePermutation::identity(3).length() == 0);
  CHECK(AffinePermutation::simple(2, 1).length() == 1);
  auto t = AffinePermutation::translation({1, 0});
  CHECK(t.length() == 1);
  CHECK(brute_force_length(t) == 1);
  // Translations: sum over i < j of |lambda_i - lambda_j|.
  auto t3 = AffinePermutation::translation({2, -1, 0});
  CHECK(t3.length() == 3 + 2 + 1);
  CHECK(brute_force_length(t3) == 6);
}

TEST_CASE("length agrees with the inversion count") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 300; ++t) {
    int r = static_cast<int>(testsupport::draw(rng, 1, 5));
    auto w = random_affine(rng, r);
    CHECK(w.length() == brute_force_length(w));
  }
}

TEST_CASE("rotation") {
  CHECK(AffinePermutation::rotation(1) == AffinePermutation::translation({1}));
  CHECK(AffinePermutation::rotation(3).length() == 0);
  CHECK(brute_force_length(AffinePermutation::rotation(3)) == 0);
  auto pi2 = AffinePermutation::rotation(2);
  CHECK(pi2 * pi2 == AffinePermutation::translation({1, 1}));
  for (int r = 1; r <= 5; ++r) {
    auto pi = AffinePermutation::rotation(r), p = AffinePermutation::identity(r);
    for (int k = 0; k < r; ++k) p = p * pi;
    CHECK(p == AffinePermutation::translation(std::vector<long>(static_cast<std::size_t>(r), 1)));
    // pi s_i pi^{-1} = s_{i+1}
    for (int i = 0; r > 1 && i < r; ++i)
      CHECK(pi * AffinePermutation::simple(r, i) * pi.inverse() == AffinePermutation::simple(r, (i + 1) % r));
  }
}

TEST_CASE("multiplication") {
  auto s = AffinePermutation::simple(2, 1);
  CHECK(s * s == AffinePermutation::identity(2));
  auto s0 = AffinePermutation::simple(3, 0);
  CHECK(s0 * s0 == AffinePermutation::identity(3));
  CHECK(s0.length() == 1);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    int r = static_cast<int>(testsupport::draw(rng, 1, 5));
    auto a = random_affine(rng, r), b = random_affine(rng, r), c = random_affine(rng, r);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * AffinePermutation::identity(r) == a);
    CHECK(a * a.inverse() == AffinePermutation::identity(r));
    // Composition of window bijections.
    for (long i = -3; i <= 3; ++i) CHECK((a * b)(i) == a(b(i)));
  }
  CHECK_THROWS_AS(AffinePermutation::identity(2) * AffinePermutation::identity(3), InvalidArgument);
}

TEST_CASE("window round trip") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    auto w = random_affine(rng, static_cast<int>(testsupport::draw(rng, 1, 6)));
    CHECK(AffinePermutation::from_window(w.window()) == w);
  }
}

TEST_CASE("length properties") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 1000; ++t) {
    int r = static_cast<int>(testsupport::draw(rng, 1, 5));
    auto w = random_affine(rng, r), v = random_affine(rng, r);
    auto pi = AffinePermutation::rotation(r);
    CHECK((pi * w).length() == w.length());
    CHECK((w * pi).length() == w.length());
    CHECK(w.inverse().length() == w.length());
    CHECK((v * w).length() <= v.length() + w.length());
  }
  // Equality exactly for reduced concatenations.
  for (int t = 0; t < 200; ++t) {
    int r = static_cast<int>(testsupport::draw(rng, 2, 5));
    auto w = random_affine(rng, r);
    auto rw = reduced_word(w);
    if (rw.word.size() < 2) continue;
    std::size_t cut = static_cast<std::size_t>(testsupport::draw(rng, 1, static_cast<std::int64_t>(rw.word.size()) - 1));
    ReducedWord left{rw.rotation_power, {rw.word.begin(), rw.word.begin() + static_cast<std::ptrdiff_t>(cut)}};
    ReducedWord right{0, {rw.word.begin() + static_cast<std::ptrdiff_t>(cut), rw.word.end()}};
    auto a = from_reduced_word(r, left), b = from_reduced_word(r, right);
    CHECK(a * b == w);
    CHECK((a * b).length() == a.length() + b.length());
    // A non-reduced concatenation: appending a right descent.
    int i = 0;
    while (!w.right_descent(i)) ++i;
    auto s = AffinePermutation::simple(r, i);
    CHECK((w * s).length() < w.length() + s.length());
  }
}

TEST_CASE("reduced words") {
  auto rw = reduced_word(AffinePermutation::identity(3));
  CHECK(rw.rotation_power == 0);
  CHECK(rw.word.empty());
  rw = reduced_word(AffinePermutation::rotation(3));
  CHECK(rw.rotation_power == 1);
  CHECK(rw.word.empty());
  auto t = AffinePermutation::translation({1, 0});
  rw = reduced_word(t);
  CHECK(rw.rotation_power == 1);
  CHECK(rw.word == std::vector<int>{1});
  CHECK(from_reduced_word(2, rw) == t);
  std::mt19937_64 rng(19);
  for (int k = 0; k < 300; ++k) {
    int r = static_cast<int>(testsupport::draw(rng, 1, 5));
    auto w = random_affine(rng, r);
    auto word = reduced_word(w);
    CHECK(static_cast<long>(word.word.size()) == w.length());
    CHECK(from_reduced_word(r, word) == w);
  }
}

namespace {

std::vector<AffinePermutation> all_perms(int r) {
  std::vector<int> p(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  std::vector<AffinePermutation> out;
  do out.push_back(AffinePermutation::finite(p));
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Minimal element of each coset W_L x, by enumeration.
std::set<AffinePermutation> brute_force_reps(const LeviShape& shape) {
  auto perms = all_perms(shape.rank());
  std::vector<AffinePermutation> levi;
  for (const auto& p : perms)
    if (shape.contains(p)) levi.push_back(p);
  std::set<AffinePermutation> reps;
  for (const auto& x : perms) {
    AffinePermutation best = x;
    for (const auto& v : levi)
      if ((v * x).length() < best.length()) best = v * x;
    reps.insert(best);
  }
  return reps;
}

}  // namespace

TEST_CASE("minimal coset representatives") {
  CHECK(min_coset_reps(LeviShape({3})) == std::vector<AffinePermutation>{AffinePermutation::identity(3)});
  auto r11 = min_coset_reps(LeviShape({1, 1}));
  CHECK(r11 == std::vector<AffinePermutation>{AffinePermutation::identity(2), AffinePermutation::simple(2, 1)});
  auto r12 = min_coset_reps(LeviShape({1, 2}));
  CHECK(r12.size() == 3);
  for (auto parts : std::vector<std::vector<int>>{{1, 2}, {2, 1}, {2, 2}, {1, 3}, {1, 1, 2}, {2, 1, 2}, {1, 1, 1, 1}}) {
    LeviShape shape(parts);
    auto reps = min_coset_reps(shape);
    CHECK(static_cast<long>(reps.size()) == multinomial(parts));
    CHECK(std::set<AffinePermutation>(reps.begin(), reps.end()) == brute_force_reps(shape));
    CHECK(std::is_sorted(reps.begin(), reps.end()));
    for (const auto& w : reps)
      for (const auto& v : all_perms(shape.rank()))
        if (shape.contains(v)) CHECK((v * w).length() == v.length() + w.length());
    for (const auto& x : all_perms(shape.rank())) {
      auto split = split_coset(shape, x);
      CHECK(split.levi_part * split.rep == x);
      CHECK(std::find(reps.begin(), reps.end(), split.rep) != reps.end());
    }
  }
}

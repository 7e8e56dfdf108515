#include "heckeforge/weyl/affine_permutation.hpp"

#include <algorithm>
#include <numeric>

#include "heckeforge/error.hpp"

namespace heckeforge::weyl {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long mod_pos(long a, long b) { return a - b * floor_div(a, b); }

}  // namespace

AffinePermutation::AffinePermutation(int r) {
  if (r < 1) throw InvalidArgument("rank must be at least 1");
  perm_.resize(static_cast<std::size_t>(r));
  std::iota(perm_.begin(), perm_.end(), 1);
  lattice_.assign(static_cast<std::size_t>(r), 0);
}

AffinePermutation::AffinePermutation(std::vector<int> perm, std::vector<long> lattice)
    : perm_(std::move(perm)), lattice_(std::move(lattice)) {
  int r = rank();
  if (r < 1 || lattice_.size() != perm_.size()) throw InvalidArgument("perm and lattice must have equal positive length");
  std::vector<bool> seen(static_cast<std::size_t>(r) + 1, false);
  for (int v : perm_) {
    if (v < 1 || v > r || seen[static_cast<std::size_t>(v)]) throw InvalidArgument("perm is not a permutation of 1..r");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

AffinePermutation AffinePermutation::from_window(const std::vector<long>& window) {
  long r = static_cast<long>(window.size());
  if (r < 1) throw InvalidArgument("empty window");
  std::vector<int> perm;
  std::vector<long> lat;
  for (long u : window) {
    long p = mod_pos(u - 1, r) + 1;
    perm.push_back(static_cast<int>(p));
    lat.push_back((u - p) / r);
  }
  return AffinePermutation(std::move(perm), std::move(lat));
}

AffinePermutation AffinePermutation::translation(const std::vector<long>& lambda) {
  AffinePermutation t(static_cast<int>(lambda.size()));
  t.lattice_ = lambda;
  return t;
}

AffinePermutation AffinePermutation::finite(const std::vector<int>& perm) {
  return AffinePermutation(perm, std::vector<long>(perm.size(), 0));
}

AffinePermutation AffinePermutation::simple(int r, int i) {
  if (r < 2 || i < 0 || i >= r) throw InvalidArgument("no simple reflection s_" + std::to_string(i) + " in rank " + std::to_string(r));
  AffinePermutation s(r);
  if (i > 0) {
    std::swap(s.perm_[static_cast<std::size_t>(i - 1)], s.perm_[static_cast<std::size_t>(i)]);
    return s;
  }
  std::swap(s.perm_.front(), s.perm_.back());
  s.lattice_.front() = -1;
  s.lattice_.back() = 1;
  return s;
}

AffinePermutation AffinePermutation::rotation(int r) {
  std::vector<long> w(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) w[static_cast<std::size_t>(i)] = i + 2;
  return from_window(w);
}

std::vector<long> AffinePermutation::window() const {
  std::vector<long> w(perm_.size());
  long r = rank();
  for (std::size_t i = 0; i < perm_.size(); ++i) w[i] = perm_[i] + r * lattice_[i];
  return w;
}

long AffinePermutation::operator()(long i) const {
  long r = rank();
  long k = floor_div(i - 1, r);
  long base = i - k * r;  // in 1..r
  auto b = static_cast<std::size_t>(base - 1);
  return perm_[b] + r * lattice_[b] + k * r;
}

long AffinePermutation::length() const {
  auto u = window();
  long r = rank(), len = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) len += std::abs(floor_div(u[j] - u[i], r));
  return len;
}

AffinePermutation AffinePermutation::inverse() const {
  std::size_t r = perm_.size();
  std::vector<int> p(r);
  std::vector<long> l(r);
  for (std::size_t i = 0; i < r; ++i) {
    auto j = static_cast<std::size_t>(perm_[i] - 1);
    p[j] = static_cast<int>(i) + 1;
    l[j] = -lattice_[i];
  }
  return AffinePermutation(std::move(p), std::move(l));
}

bool AffinePermutation::is_finite() const {
  return std::all_of(lattice_.begin(), lattice_.end(), [](long x) { return x == 0; });
}

long AffinePermutation::rotation_degree() const { return std::accumulate(lattice_.begin(), lattice_.end(), 0L); }

bool AffinePermutation::right_descent(int i) const {
  if (rank() < 2 || i < 0 || i >= rank()) throw InvalidArgument("descent index out of range");
  return (*this)(i) > (*this)(i + 1);
}

bool AffinePermutation::left_descent(int i) const { return inverse().right_descent(i); }

AffinePermutation operator*(const AffinePermutation& a, const AffinePermutation& b) {
  if (a.rank() != b.rank()) throw InvalidArgument("rank mismatch in product");
  std::size_t r = a.perm_.size();
  std::vector<int> p(r);
  std::vector<long> l(r);
  for (std::size_t i = 0; i < r; ++i) {
    auto bi = static_cast<std::size_t>(b.perm_[i] - 1);
    p[i] = a.perm_[bi];
    l[i] = a.lattice_[bi] + b.lattice_[i];
  }
  return AffinePermutation(std::move(p), std::move(l));
}

std::strong_ordering operator<=>(const AffinePermutation& a, const AffinePermutation& b) {
  if (a.rank() != b.rank()) return a.rank() <=> b.rank();
  auto wa = a.window(), wb = b.window();
  return wa <=> wb;
}

std::string AffinePermutation::to_string() const {
  std::string s = "[";
  auto w = window();
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + "]";
}

ReducedWord reduced_word(const AffinePermutation& w) {
  ReducedWord rw;
  AffinePermutation cur = w;
  int r = w.rank();
  while (cur.length() > 0) {
    int i = 0;
    while (!cur.right_descent(i)) ++i;
    cur = cur * AffinePermutation::simple(r, i);
    rw.word.push_back(i);
  }
  std::reverse(rw.word.begin(), rw.word.end());
  rw.rotation_power = cur.rotation_degree();
  return rw;
}

AffinePermutation from_reduced_word(int r, const ReducedWord& rw) {
  AffinePermutation pi = AffinePermutation::rotation(r), out(r);
  long c = rw.rotation_power;
  AffinePermutation step = c >= 0 ? pi : pi.inverse();
  for (long k = 0; k < std::abs(c); ++k) out = out * step;
  for (int i : rw.word) out = out * AffinePermutation::simple(r, i);
  return out;
}

LeviShape::LeviShape(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("empty Levi shape");
  for (int p : parts_) {
    if (p < 1) throw InvalidArgument("Levi shape parts must be positive");
    offsets_.push_back(rank_);
    rank_ += p;
  }
}

std::size_t LeviShape::block_of(int i) const {
  if (i < 1 || i > rank_) throw InvalidArgument("position outside 1..r");
  std::size_t k = 0;
  while (k + 1 < parts_.size() && offsets_[k + 1] < i) ++k;
  return k;
}

bool LeviShape::contains_simple(int i) const { return i >= 1 && i < rank_ && block_of(i) == block_of(i + 1); }

bool LeviShape::contains(const AffinePermutation& x) const {
  if (!x.is_finite() || x.rank() != rank_) return false;
  for (int i = 1; i <= rank_; ++i)
    if (block_of(i) != block_of(x.perm()[static_cast<std::size_t>(i - 1)])) return false;
  return true;
}

std::string LeviShape::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) s += (k ? "," : "") + std::to_string(parts_[k]);
  return s + ")";
}

std::vector<AffinePermutation> min_coset_reps(const LeviShape& shape) {
  int r = shape.rank();
  // w^{-1} increasing on each block; enumerate w^{-1} as an assignment of
  // blocks to positions (a multiset permutation of block labels).
  std::vector<int> labels;
  for (std::size_t k = 0; k < shape.size(); ++k) labels.insert(labels.end(), static_cast<std::size_t>(shape.parts()[k]), static_cast<int>(k));
  std::vector<AffinePermutation> reps;
  do {
    // labels[p-1] = block receiving value p; w^{-1} maps block entries in order.
    std::vector<int> inv(static_cast<std::size_t>(r));
    std::vector<int> next(shape.size());
    for (std::size_t k = 0; k < shape.size(); ++k) next[k] = shape.offset(k) + 1;
    for (int p = 1; p <= r; ++p) {
      auto k = static_cast<std::size_t>(labels[static_cast<std::size_t>(p - 1)]);
      inv[static_cast<std::size_t>(next[k]++ - 1)] = p;
    }
    reps.push_back(AffinePermutation::finite(inv).inverse());
  } while (std::next_permutation(labels.begin(), labels.end()));
  std::sort(reps.begin(), reps.end());
  return reps;
}

CosetSplit split_coset(const LeviShape& shape, const AffinePermutation& x) {
  if (!x.is_finite() || x.rank() != shape.rank()) throw InvalidArgument("coset split needs a finite permutation of matching rank");
  auto xinv = x.inverse();
  std::vector<int> winv(static_cast<std::size_t>(shape.rank()));
  for (std::size_t k = 0; k < shape.size(); ++k) {
    std::vector<int> vals;
    for (int i = 0; i < shape.parts()[k]; ++i) vals.push_back(xinv.perm()[static_cast<std::size_t>(shape.offset(k) + i)]);
    std::sort(vals.begin(), vals.end());
    for (int i = 0; i < shape.parts()[k]; ++i) winv[static_cast<std::size_t>(shape.offset(k) + i)] = vals[static_cast<std::size_t>(i)];
  }
  AffinePermutation rep = AffinePermutation::finite(winv).inverse();
  AffinePermutation y = x * rep.inverse();
  if (!shape.contains(y)) throw Error("internal: coset split left the Levi subgroup");
  return {y, rep};
}

long multinomial(const std::vector<int>& parts) {
  long result = 1, n = 0;
  for (int p : parts)
    for (int i = 1; i <= p; ++i) {
      ++n;
      result = result * n / i;
    }
  return result;
}

}  // namespace heckeforge::weyl

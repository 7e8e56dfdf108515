#include "heckeforge/hecke/irreducibility.hpp"

#include <random>

#include "heckeforge/error.hpp"
#include "heckeforge/exact/polynomial.hpp"

namespace heckeforge::hecke {

std::string to_string(IrreducibilityVerdict::Kind k) {
  switch (k) {
    case IrreducibilityVerdict::Kind::Irreducible: return "Irreducible";
    case IrreducibilityVerdict::Kind::Reducible: return "Reducible";
    case IrreducibilityVerdict::Kind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

constexpr std::size_t kCommutantMax = 8;
constexpr std::size_t kBurnsideMax = 8;

std::vector<exact::LinearConstraint> commuting(const std::vector<Matrix>& gens) {
  std::vector<exact::LinearConstraint> cs;
  for (const auto& g : gens) cs.push_back({g, g});
  return cs;
}

std::optional<IrreducibilityVerdict> reducible(const HModule& m, const Matrix& w, const std::string& method, int attempts) {
  Matrix basis = exact::rref(w);
  std::size_t k = exact::rank(basis);
  if (k == 0 || k >= m.dim()) return std::nullopt;
  basis = basis.submatrix(0, 0, k, basis.cols());
  if (!exact::is_invariant(basis, m.closure_generators())) return std::nullopt;
  IrreducibilityVerdict v;
  v.kind = IrreducibilityVerdict::Kind::Reducible;
  v.witness = basis;
  v.method = method;
  v.attempts = attempts;
  return v;
}

IrreducibilityVerdict verdict(IrreducibilityVerdict::Kind k, const std::string& method, int attempts) {
  IrreducibilityVerdict v;
  v.kind = k;
  v.method = method;
  v.attempts = attempts;
  return v;
}

// Norton: v spans a one-dimensional kernel of some x, u spans that of x^T.
IrreducibilityVerdict norton(const HModule& m, const Matrix& v, const Matrix& u, const std::string& method, int attempts) {
  auto gens = m.closure_generators();
  Matrix s = exact::span_closure(v, gens);
  if (s.rows() < m.dim()) {
    if (auto r = reducible(m, s, method, attempts)) return *r;
    throw Error("internal: spin of a kernel vector is not a proper invariant subspace");
  }
  std::vector<Matrix> tgens;
  for (const auto& g : gens) tgens.push_back(g.transpose());
  Matrix t = exact::span_closure(u, tgens);
  if (t.rows() < m.dim()) {
    if (auto r = reducible(m, exact::kernel(t), method, attempts)) return *r;
    throw Error("internal: annihilator of a dual spin is not a proper invariant subspace");
  }
  return verdict(IrreducibilityVerdict::Kind::Irreducible, method, attempts);
}

std::optional<IrreducibilityVerdict> commutant_tier(const HModule& m) {
  auto basis = exact::solve_linear_subspace(commuting(m.closure_generators()));
  if (basis.size() <= 1) return std::nullopt;
  std::size_t n = m.dim();
  Matrix id = Matrix::identity(n, m.field());
  for (const auto& x : basis) {
    std::vector<Matrix> cands{x};
    for (std::size_t i = 0; i < n; ++i) cands.push_back(x - id.scaled(x.at(i, i)));
    if (m.field().kind == Field::Kind::Rational) {
      auto cp = exact::charpoly(x);
      std::vector<Rational> c;
      for (const auto& s : cp) c.push_back(s.as_rational());
      for (const auto& root : exact::rational_roots(exact::Poly(c))) cands.push_back(x - id.scaled(Scalar(root)));
    }
    for (const auto& y : cands) {
      if (y.is_zero()) continue;
      if (auto r = reducible(m, y, "commutant", 0)) return r;
    }
  }
  return std::nullopt;
}

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::optional<IrreducibilityVerdict> random_norton_tier(const HModule& m, std::uint64_t seed, int retries) {
  std::mt19937_64 rng(seed);
  auto gens = m.closure_generators();
  gens.push_back(m.rotation_inverse());
  std::size_t n = m.dim();
  Matrix id = Matrix::identity(n, m.field());
  for (int attempt = 1; attempt <= retries; ++attempt) {
    Matrix a(n, n, m.field());
    long terms = draw(rng, 2, 3);
    for (long t = 0; t < terms; ++t) {
      Matrix w = id;
      long len = draw(rng, 1, 3);
      for (long k = 0; k < len; ++k) w = w * gens[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(gens.size()) - 1))];
      long c = draw(rng, -3, 3);
      if (c == 0) c = 1;
      a += w.scaled(Scalar(Rational(c)));
    }
    auto cp = exact::charpoly(a);
    std::vector<Rational> c;
    for (const auto& s : cp) c.push_back(s.as_rational());
    for (const auto& root : exact::rational_roots(exact::Poly(c))) {
      Matrix x = a - id.scaled(Scalar(root));
      Matrix k = exact::left_kernel(x);
      if (k.rows() != 1) continue;
      return norton(m, k, exact::kernel(x), "norton", attempt);
    }
  }
  return std::nullopt;
}

std::optional<IrreducibilityVerdict> theta_tier(const HModule& m) {
  const auto& th = m.theta_matrices();
  std::size_t n = m.dim();
  Matrix id = Matrix::identity(n, m.field());
  for (const auto& w : m.weight_candidates()) {
    std::vector<Matrix> shifted;
    for (std::size_t j = 0; j < th.size(); ++j) shifted.push_back(th[j] - id.scaled(w[j]));
    // Left kernel: v (Theta_j - w_j) = 0 for all j.
    std::vector<Matrix> tparts;
    for (const auto& s : shifted) tparts.push_back(s.transpose());
    Matrix left = exact::left_kernel(Matrix::vstack(tparts).transpose());
    if (left.rows() != 1) continue;
    Matrix right = exact::kernel(Matrix::vstack(shifted));
    if (right.rows() != 1) continue;
    return norton(m, left, right, "theta-weight", 0);
  }
  return std::nullopt;
}

// Dimension of the algebra generated by the matrices (Burnside: n^2 iff absolutely irreducible).
std::size_t algebra_dimension(const HModule& m) {
  std::size_t n = m.dim();
  const Field& f = m.field();
  auto flatten = [&](const Matrix& a) {
    Matrix v(1, n * n, f);
    for (std::size_t i = 0; i < n; ++i) v.set_block(0, i * n, a.row(i));
    return v;
  };
  std::vector<Matrix> ops;
  for (const auto& g : m.closure_generators()) ops.push_back(Matrix::kron(Matrix::identity(n, f), g));
  return exact::span_closure(flatten(Matrix::identity(n, f)), ops).rows();
}

}  // namespace

std::size_t commutant_dim(const HModule& m) { return exact::solve_linear_subspace(commuting(m.closure_generators())).size(); }

IrreducibilityVerdict is_irreducible(const HModule& m, std::uint64_t seed, const IrreducibilityOptions& opts) {
  if (opts.retries < 1) throw InvalidArgument("retry bound must be at least 1");
  if (m.dim() <= 1) return verdict(IrreducibilityVerdict::Kind::Irreducible, "trivial", 0);
  bool generic = m.algebra().is_generic();
  if (!generic)
    if (auto v = theta_tier(m)) return *v;
  if (m.dim() <= kCommutantMax)
    if (auto v = commutant_tier(m)) return *v;
  if (!generic) {
    if (m.field().kind == Field::Kind::Rational)
      if (auto v = random_norton_tier(m, seed, opts.retries)) return *v;
  }
  if (m.dim() <= kBurnsideMax && algebra_dimension(m) == m.dim() * m.dim())
    return verdict(IrreducibilityVerdict::Kind::Irreducible, "burnside", 0);
  if (generic) throw UnsupportedField("the Norton test needs a specialized q; commutant and Burnside tests were not decisive");
  return verdict(IrreducibilityVerdict::Kind::Inconclusive, "exhausted", opts.retries);
}

}  // namespace heckeforge::hecke

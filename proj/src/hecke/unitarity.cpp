#include "heckeforge/hecke/unitarity.hpp"

#include "heckeforge/error.hpp"
#include "heckeforge/exact/polynomial.hpp"

namespace heckeforge::hecke {

std::string to_string(UnitarityVerdict::Kind k) {
  switch (k) {
    case UnitarityVerdict::Kind::Unitary: return "Unitary";
    case UnitarityVerdict::Kind::NotUnitary: return "NotUnitary";
    case UnitarityVerdict::Kind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

void require_positive_q(const HeckeAlgebra& alg) {
  auto q = alg.q_value();
  if (!q) throw UnsupportedField("unitarity needs a specialized q");
  if (q->sign() <= 0) throw InvalidArgument("unitarity needs a positive real q");
}

// S A^H = A S for the generators; S (P^{-1})^H = sigma P S for the rotation.
void add_constraints(const HModule& m, std::vector<exact::LinearConstraint>& cs) {
  for (const auto& a : m.generators()) cs.push_back({a.conj_transpose(), a});
  Scalar sigma = m.half_twist() ? m.algebra().q() : Scalar::one(m.field());
  cs.push_back({m.rotation_inverse().conj_transpose(), m.rotation().scaled(sigma)});
}

Matrix flatten(const Matrix& a) {
  Matrix v(1, a.rows() * a.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) v.set_block(0, i * a.cols(), a.row(i));
  return v;
}

// A basis (over the real subfield) of the Hermitian members of a solution space
// closed under conjugate transpose.
std::vector<Matrix> hermitian_basis(const std::vector<Matrix>& sols, const Field& f) {
  std::vector<Matrix> cands;
  std::optional<Scalar> imag;
  if (f.kind == Field::Kind::Cyclotomic && f.conductor >= 3) {
    auto z = Scalar(exact::Cyclotomic::zeta(f.conductor, 1));
    imag = z - z.inverse();
  }
  for (const auto& s : sols) {
    cands.push_back(s + s.conj_transpose());
    if (imag) cands.push_back((s - s.conj_transpose()).scaled(*imag));
  }
  std::vector<Matrix> basis;
  std::vector<Matrix> rows;
  for (const auto& c : cands) {
    if (c.is_zero()) continue;
    rows.push_back(flatten(c));
    if (exact::rank(Matrix::vstack(rows)) == rows.size()) {
      basis.push_back(c);
    } else {
      rows.pop_back();
    }
  }
  return basis;
}

bool all_rational(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_rational_value()) return false;
  return true;
}

Matrix to_rational(const Matrix& m) {
  Matrix out(m.rows(), m.cols(), Field::rational());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, Scalar(m.at(i, j).rational_value()));
  return out;
}

std::optional<Matrix> definite(const Matrix& h) {
  auto sig = exact::signature(h);
  if (sig.n_plus == h.rows()) return h;
  if (sig.n_minus == h.rows()) return -h;
  return std::nullopt;
}

UnitarityVerdict decide(std::vector<exact::LinearConstraint> cs, const Field& f) {
  auto sols = exact::solve_linear_subspace(cs);
  auto herm = hermitian_basis(sols, f);
  UnitarityVerdict v;
  v.form_space_dim = herm.size();
  if (herm.empty()) {
    v.kind = UnitarityVerdict::Kind::NotUnitary;
    v.reason = "no invariant form";
    return v;
  }
  if (herm.size() == 1) {
    if (auto g = definite(herm[0])) {
      v.kind = UnitarityVerdict::Kind::Unitary;
      v.gram = *g;
    } else {
      v.kind = UnitarityVerdict::Kind::NotUnitary;
      v.reason = "indefinite";
    }
    return v;
  }
  if (herm.size() > 2 || !all_rational(herm[0]) || !all_rational(herm[1])) {
    v.kind = UnitarityVerdict::Kind::Inconclusive;
    return v;
  }
  // Pencil H1 + t H2: the signature is constant between roots of det(H1 + t H2).
  Matrix h1 = to_rational(herm[0]), h2 = to_rational(herm[1]);
  std::size_t n = h1.rows();
  exact::Poly d;
  for (std::size_t k = 0; k <= n; ++k) {
    Rational t(static_cast<std::int64_t>(k));
    Rational val = exact::det(h1 + h2.scaled(Scalar(t))).as_rational();
    exact::Poly basis(Rational(1));
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == k) continue;
      Rational tj(static_cast<std::int64_t>(j));
      basis *= exact::Poly(std::vector<Rational>{-tj, Rational(1)}).scaled((t - tj).inverse());
    }
    d += basis.scaled(val);
  }
  std::vector<Rational> samples;
  if (!d.is_zero()) {
    auto iv = exact::isolate_real_roots(d);
    if (iv.empty()) {
      samples.push_back(Rational(0));
    } else {
      samples.push_back(iv.front().first);
      for (const auto& [a, b] : iv) samples.push_back(b);
    }
  }
  std::vector<Matrix> members{h2};
  for (const auto& t : samples) members.push_back(h1 + h2.scaled(Scalar(t)));
  for (const auto& m : members)
    if (auto g = definite(m)) {
      v.kind = UnitarityVerdict::Kind::Unitary;
      v.gram = g->to_field(f);
      return v;
    }
  v.kind = UnitarityVerdict::Kind::NotUnitary;
  v.reason = "indefinite";
  return v;
}

}  // namespace

UnitarityVerdict is_unitary(const HModule& m) {
  require_positive_q(m.algebra());
  std::vector<exact::LinearConstraint> cs;
  add_constraints(m, cs);
  return decide(std::move(cs), m.field());
}

UnitarityVerdict is_unitary(const LeviModule& v) {
  require_positive_q(v.algebra().ambient());
  std::vector<exact::LinearConstraint> cs;
  for (const auto& f : v.factors()) add_constraints(f, cs);
  return decide(std::move(cs), v.algebra().ambient().field());
}

}  // namespace heckeforge::hecke

#include "heckeforge/hecke/algebra.hpp"

#include <algorithm>

#include "heckeforge/error.hpp"

namespace heckeforge::hecke {

HeckeAlgebra HeckeAlgebra::generic(int r) {
  if (r < 1) throw InvalidArgument("rank must be at least 1");
  HeckeAlgebra a;
  a.r_ = r;
  a.field_ = Field::ratfunc();
  a.q_ = exact::RatFunc::q();
  return a;
}

HeckeAlgebra HeckeAlgebra::specialized(int r, const Rational& q, int conductor) {
  if (r < 1) throw InvalidArgument("rank must be at least 1");
  if (q.is_zero()) throw InvalidArgument("specialization q = 0");
  HeckeAlgebra a;
  a.r_ = r;
  a.field_ = conductor > 1 ? Field::cyclotomic(conductor) : Field::rational();
  a.q_ = Scalar(q).to_field(a.field_);
  if (q.is_perfect_square()) {
    a.sqrt_q_ = Scalar(q.sqrt_exact()).to_field(a.field_);
  } else if (conductor > 1) {
    if (auto s = exact::Cyclotomic::sqrt_rational(q, conductor)) a.sqrt_q_ = Scalar(*s);
  }
  return a;
}

std::optional<Rational> HeckeAlgebra::q_value() const {
  if (is_generic()) return std::nullopt;
  return q_.rational_value();
}

HeckeAlgebra HeckeAlgebra::with_rank(int r) const {
  if (r < 1) throw InvalidArgument("rank must be at least 1");
  HeckeAlgebra a = *this;
  a.r_ = r;
  return a;
}

std::string HeckeAlgebra::to_string() const {
  return "H_" + std::to_string(r_) + "(q=" + q_.to_string() + ") over " + field_.to_string();
}

HeckeElement HeckeElement::basis(const HeckeAlgebra& alg, const AffinePermutation& w, const Scalar& c) {
  HeckeElement x(alg);
  x.add_term(w, c);
  return x;
}

Scalar HeckeElement::coeff(const AffinePermutation& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(alg_.field()) : it->second;
}

std::vector<AffinePermutation> HeckeElement::support() const {
  std::vector<AffinePermutation> s;
  for (const auto& [w, c] : terms_) s.push_back(w);
  return s;
}

void HeckeElement::add_term(const AffinePermutation& w, const Scalar& c) {
  if (w.rank() != alg_.rank()) throw InvalidArgument("basis element rank differs from algebra rank");
  if (c.is_zero()) return;
  Scalar v = c.to_field(alg_.field());
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElement HeckeElement::operator-() const {
  HeckeElement x = *this;
  for (auto& [w, c] : x.terms_) c = -c;
  return x;
}

namespace {

void require_same(const HeckeAlgebra& a, const HeckeAlgebra& b) {
  if (!(a == b)) throw InvalidArgument("elements of different algebras: " + a.to_string() + " vs " + b.to_string());
}

}  // namespace

HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
  require_same(a.alg_, b.alg_);
  HeckeElement x = a;
  for (const auto& [w, c] : b.terms_) x.add_term(w, c);
  return x;
}

HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) { return a + (-b); }

HeckeElement HeckeElement::scaled(const Scalar& c) const {
  HeckeElement x(alg_);
  if (c.is_zero()) return x;
  for (const auto& [w, v] : terms_) x.add_term(w, v * c);
  return x;
}

bool operator==(const HeckeElement& a, const HeckeElement& b) {
  if (!(a.alg_ == b.alg_) || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
  return true;
}

HeckeElement HeckeElement::left_mul_simple(int i) const {
  int r = alg_.rank();
  AffinePermutation s = AffinePermutation::simple(r, i);
  const Scalar& q = alg_.q();
  Scalar qm1 = q - Scalar::one(alg_.field());
  HeckeElement out(alg_);
  for (const auto& [y, c] : terms_) {
    AffinePermutation sy = s * y;
    if (!y.left_descent(i)) {
      out.add_term(sy, c);
    } else {
      out.add_term(y, c * qm1);
      out.add_term(sy, c * q);
    }
  }
  return out;
}

HeckeElement HeckeElement::left_mul_rotation(long c) const {
  AffinePermutation pi = AffinePermutation::rotation(alg_.rank());
  AffinePermutation p = AffinePermutation::identity(alg_.rank());
  AffinePermutation step = c >= 0 ? pi : pi.inverse();
  for (long k = 0; k < std::abs(c); ++k) p = p * step;
  HeckeElement out(alg_);
  for (const auto& [y, v] : terms_) out.terms_.emplace(p * y, v);
  return out;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  require_same(a.alg_, b.alg_);
  HeckeElement out(a.alg_);
  for (const auto& [w, c] : a.terms_) {
    auto rw = weyl::reduced_word(w);
    HeckeElement y = b;
    for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) y = y.left_mul_simple(*it);
    y = y.left_mul_rotation(rw.rotation_power);
    for (const auto& [u, v] : y.terms_) out.add_term(u, c * v);
  }
  return out;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) s += (s.empty() ? "" : " + ") + std::string("(") + c.to_string() + ")*T" + w.to_string();
  return s;
}

HeckeElement im_multiply(const HeckeElement& a, const HeckeElement& b) { return a * b; }

HeckeElement invert_basis_element(const HeckeAlgebra& alg, const AffinePermutation& w) {
  // T_w = T_pi^c T_{i_1} ... T_{i_k}; invert letter by letter.
  auto rw = weyl::reduced_word(w);
  Scalar qinv = alg.q().inverse();
  Scalar one = Scalar::one(alg.field());
  HeckeElement out = HeckeElement::one(alg).left_mul_rotation(-rw.rotation_power);
  for (int i : rw.word) {
    // out <- T_i^{-1} out = q^{-1} T_i out + (q^{-1} - 1) out
    out = out.left_mul_simple(i).scaled(qinv) + out.scaled(qinv - one);
  }
  return out;
}

bool is_dominant(const std::vector<long>& lambda) {
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1]) return false;
  return true;
}

HeckeElement theta_via(const HeckeAlgebra& alg, const std::vector<long>& lambda, const std::vector<long>& nu) {
  if (static_cast<int>(lambda.size()) != alg.rank() || nu.size() != lambda.size())
    throw InvalidArgument("theta: weight length differs from rank");
  std::vector<long> mu(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) mu[i] = lambda[i] + nu[i];
  if (!is_dominant(mu) || !is_dominant(nu)) throw InvalidArgument("theta: decomposition is not dominant");
  return HeckeElement::basis(alg, AffinePermutation::translation(mu)) *
         invert_basis_element(alg, AffinePermutation::translation(nu));
}

HeckeElement theta(const HeckeAlgebra& alg, const std::vector<long>& lambda) {
  if (static_cast<int>(lambda.size()) != alg.rank()) throw InvalidArgument("theta: weight length differs from rank");
  long k = 0;
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i) k = std::max(k, lambda[i + 1] - lambda[i]);
  std::vector<long> nu(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) nu[i] = k * static_cast<long>(lambda.size() - 1 - i);
  return theta_via(alg, lambda, nu);
}

HeckeElement star(const HeckeElement& x) {
  HeckeElement out(x.algebra());
  for (const auto& [w, c] : x.terms()) out.add_term(w.inverse(), c.conj());
  return out;
}

HeckeElement specialize(const HeckeElement& x, const Rational& c) {
  if (!x.algebra().is_generic()) throw InvalidArgument("specialize expects an element over Q(q)");
  HeckeAlgebra target = HeckeAlgebra::specialized(x.algebra().rank(), c);
  HeckeElement out(target);
  for (const auto& [w, v] : x.terms()) out.add_term(w, exact::specialize_q(v, c));
  return out;
}

}  // namespace heckeforge::hecke

#include "heckeforge/hecke/bernstein.hpp"

#include "heckeforge/error.hpp"

namespace heckeforge::hecke {

BernsteinElement BernsteinElement::term(const HeckeAlgebra& alg, const std::vector<long>& lambda,
                                        const AffinePermutation& x, const Scalar& c) {
  BernsteinElement e(alg);
  e.add_term(lambda, x, c);
  return e;
}

BernsteinElement BernsteinElement::one(const HeckeAlgebra& alg) {
  return term(alg, std::vector<long>(static_cast<std::size_t>(alg.rank()), 0), AffinePermutation::identity(alg.rank()));
}

void BernsteinElement::add_term(const std::vector<long>& lambda, const AffinePermutation& x, const Scalar& c) {
  if (static_cast<int>(lambda.size()) != alg_.rank() || x.rank() != alg_.rank() || !x.is_finite())
    throw InvalidArgument("Bernstein term needs a weight of length r and a finite permutation");
  if (c.is_zero()) return;
  BernsteinKey key{lambda, x};
  Scalar v = c.to_field(alg_.field());
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) terms_.erase(it);
}

BernsteinElement operator+(const BernsteinElement& a, const BernsteinElement& b) {
  if (!(a.alg_ == b.alg_)) throw InvalidArgument("Bernstein elements of different algebras");
  BernsteinElement out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k.lambda, k.x, c);
  return out;
}

BernsteinElement BernsteinElement::scaled(const Scalar& c) const {
  BernsteinElement out(alg_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : terms_) out.add_term(k.lambda, k.x, v * c);
  return out;
}

bool operator==(const BernsteinElement& a, const BernsteinElement& b) {
  if (!(a.alg_ == b.alg_) || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
  return true;
}

BernsteinElement BernsteinElement::left_mul_finite_simple(int i) const {
  // T_s theta_x = q^k theta_{sx} T_s + (q - 1) theta_x G, k = x_i - x_{i+1},
  // G = sum_{j=0}^{k-1} q^j theta_{-j alpha} (k > 0), -sum_{j=k}^{-1} q^j theta_{-j alpha} (k < 0).
  int r = alg_.rank();
  auto s = AffinePermutation::simple(r, i);
  const Scalar& q = alg_.q();
  Scalar one = Scalar::one(alg_.field());
  Scalar qm1 = q - one;
  auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(i);
  BernsteinElement out(alg_);
  for (const auto& [key, c] : terms_) {
    const auto& lam = key.lambda;
    long k = lam[a] - lam[b];
    auto slam = lam;
    std::swap(slam[a], slam[b]);
    Scalar ck = c * q.pow(k);
    if (!key.x.left_descent(i)) {
      out.add_term(slam, s * key.x, ck);
    } else {
      out.add_term(slam, key.x, ck * qm1);
      out.add_term(slam, s * key.x, ck * q);
    }
    if (k == 0) continue;
    long lo = k > 0 ? 0 : k, hi = k > 0 ? k - 1 : -1;
    Scalar base = k > 0 ? c * qm1 : -(c * qm1);
    for (long j = lo; j <= hi; ++j) {
      auto mu = lam;
      mu[a] -= j;
      mu[b] += j;
      out.add_term(mu, key.x, base * q.pow(j));
    }
  }
  return out;
}

BernsteinElement BernsteinElement::left_mul_simple(int i) const {
  int r = alg_.rank();
  if (i < 0 || i >= r || r < 2) throw InvalidArgument("no simple reflection s_" + std::to_string(i));
  if (i > 0) return left_mul_finite_simple(i);
  // T_{s_0} = T_pi T_{s_{r-1}} T_pi^{-1}
  return left_mul_rotation(-1).left_mul_finite_simple(r - 1).left_mul_rotation(1);
}

BernsteinElement BernsteinElement::left_mul_simple_inverse(int i) const {
  Scalar qinv = alg_.q().inverse();
  return left_mul_simple(i).scaled(qinv) + scaled(qinv - Scalar::one(alg_.field()));
}

BernsteinElement BernsteinElement::left_mul_theta(const std::vector<long>& mu) const {
  if (static_cast<int>(mu.size()) != alg_.rank()) throw InvalidArgument("theta weight length differs from rank");
  BernsteinElement out(alg_);
  for (const auto& [key, c] : terms_) {
    auto lam = key.lambda;
    for (std::size_t j = 0; j < lam.size(); ++j) lam[j] += mu[j];
    out.add_term(lam, key.x, c);
  }
  return out;
}

AffinePermutation rotation_cofactor(int r) {
  std::vector<int> p(static_cast<std::size_t>(r));
  p[0] = r;
  for (int i = 2; i <= r; ++i) p[static_cast<std::size_t>(i - 1)] = i - 1;
  return AffinePermutation::finite(p);
}

BernsteinElement BernsteinElement::left_mul_rotation(long c) const {
  int r = alg_.rank();
  std::vector<long> e1(static_cast<std::size_t>(r), 0), me1(static_cast<std::size_t>(r), 0);
  e1[0] = 1;
  me1[0] = -1;
  auto word = weyl::reduced_word(rotation_cofactor(r)).word;
  BernsteinElement cur = *this;
  for (long step = 0; step < c; ++step) {
    // T_pi = theta_{e_1} T_c^{-1}
    for (int i : word) cur = cur.left_mul_simple_inverse(i);
    cur = cur.left_mul_theta(e1);
  }
  for (long step = 0; step < -c; ++step) {
    // T_pi^{-1} = T_c theta_{-e_1}
    cur = cur.left_mul_theta(me1);
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = cur.left_mul_simple(*it);
  }
  return cur;
}

BernsteinElement BernsteinElement::right_mul_simple(int i) const {
  int r = alg_.rank();
  if (i < 1 || i >= r) throw InvalidArgument("right multiplication needs a finite simple reflection");
  auto s = AffinePermutation::simple(r, i);
  const Scalar& q = alg_.q();
  Scalar qm1 = q - Scalar::one(alg_.field());
  BernsteinElement out(alg_);
  for (const auto& [key, c] : terms_) {
    if (!key.x.right_descent(i)) {
      out.add_term(key.lambda, key.x * s, c);
    } else {
      out.add_term(key.lambda, key.x, c * qm1);
      out.add_term(key.lambda, key.x * s, c * q);
    }
  }
  return out;
}

std::string BernsteinElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    std::string lam = "(";
    for (std::size_t j = 0; j < k.lambda.size(); ++j) lam += (j ? "," : "") + std::to_string(k.lambda[j]);
    s += (s.empty() ? "" : " + ") + std::string("(") + c.to_string() + ")*theta" + lam + ")*T" + k.x.to_string();
  }
  return s;
}

BernsteinElement to_bernstein(const HeckeElement& x) {
  const auto& alg = x.algebra();
  BernsteinElement out(alg);
  for (const auto& [w, c] : x.terms()) {
    auto rw = weyl::reduced_word(w);
    BernsteinElement e = BernsteinElement::one(alg);
    for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) e = e.left_mul_simple(*it);
    e = e.left_mul_rotation(rw.rotation_power);
    out = out + e.scaled(c);
  }
  return out;
}

HeckeElement from_bernstein(const BernsteinElement& x) {
  const auto& alg = x.algebra();
  HeckeElement out(alg);
  std::map<std::vector<long>, HeckeElement> cache;
  for (const auto& [k, c] : x.terms()) {
    auto it = cache.find(k.lambda);
    if (it == cache.end()) it = cache.emplace(k.lambda, theta(alg, k.lambda)).first;
    out = out + (it->second * HeckeElement::basis(alg, k.x)).scaled(c);
  }
  return out;
}

}  // namespace heckeforge::hecke

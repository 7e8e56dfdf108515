#include "heckeforge/hecke/levi.hpp"

#include "heckeforge/error.hpp"
#include "heckeforge/hecke/bernstein.hpp"

namespace heckeforge::hecke {

LeviAlgebra::LeviAlgebra(const HeckeAlgebra& ambient, LeviShape shape) : ambient_(ambient), shape_(std::move(shape)) {
  if (shape_.rank() != ambient_.rank())
    throw ShapeMismatch("Levi shape " + shape_.to_string() + " does not sum to rank " + std::to_string(ambient_.rank()));
  for (int m : shape_.parts()) factors_.push_back(ambient_.with_rank(m));
}

LeviElement LeviElement::one(const LeviAlgebra& l) {
  LeviElement x(l);
  Key k;
  for (std::size_t i = 0; i < l.size(); ++i) k.push_back(AffinePermutation::identity(l.factor(i).rank()));
  x.add_term(k, Scalar(Rational(1)));
  return x;
}

void LeviElement::add_term(const Key& w, const Scalar& c) {
  if (w.size() != l_.size()) throw ShapeMismatch("Levi term has the wrong number of factors");
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k].rank() != l_.factor(k).rank()) throw ShapeMismatch("Levi term factor rank mismatch");
  if (c.is_zero()) return;
  Scalar v = c.to_field(l_.ambient().field());
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) terms_.erase(it);
}

LeviElement LeviElement::tensor(const LeviAlgebra& l, const std::vector<HeckeElement>& factors) {
  if (factors.size() != l.size()) throw ShapeMismatch("tensor needs one element per Levi factor");
  std::map<Key, Scalar> acc{{Key{}, Scalar(Rational(1))}};
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (!(factors[k].algebra() == l.factor(k))) throw ShapeMismatch("factor element over the wrong algebra");
    std::map<Key, Scalar> next;
    for (const auto& [key, c] : acc)
      for (const auto& [w, d] : factors[k].terms()) {
        Key nk = key;
        nk.push_back(w);
        next.emplace(std::move(nk), c * d);
      }
    acc = std::move(next);
  }
  LeviElement x(l);
  for (const auto& [key, c] : acc) x.add_term(key, c);
  return x;
}

LeviElement operator+(const LeviElement& a, const LeviElement& b) {
  if (!(a.l_ == b.l_)) throw ShapeMismatch("Levi elements of different algebras");
  LeviElement out = a;
  for (const auto& [k, c] : b.terms_) out.add_term(k, c);
  return out;
}

LeviElement operator*(const LeviElement& a, const LeviElement& b) {
  if (!(a.l_ == b.l_)) throw ShapeMismatch("Levi elements of different algebras");
  LeviElement out(a.l_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      std::vector<HeckeElement> parts;
      for (std::size_t k = 0; k < ka.size(); ++k) {
        const auto& f = a.l_.factor(k);
        parts.push_back(HeckeElement::basis(f, ka[k]) * HeckeElement::basis(f, kb[k]));
      }
      auto t = LeviElement::tensor(a.l_, parts);
      for (const auto& [k, c] : t.terms_) out.add_term(k, c * ca * cb);
    }
  return out;
}

HeckeElement levi_embed(const LeviAlgebra& l, const LeviElement& x) {
  if (!(x.algebra() == l)) throw ShapeMismatch("element does not belong to this Levi algebra");
  const auto& shape = l.shape();
  int r = shape.rank();
  BernsteinElement total(l.ambient());
  for (const auto& [key, c] : x.terms()) {
    // Product over factors of their Bernstein expansions, placed blockwise.
    BernsteinElement acc = BernsteinElement::one(l.ambient()).scaled(c);
    for (std::size_t k = 0; k < l.size(); ++k) {
      auto fb = to_bernstein(HeckeElement::basis(l.factor(k), key[k]));
      int off = shape.offset(k);
      BernsteinElement next(l.ambient());
      for (const auto& [ak, ac] : acc.terms())
        for (const auto& [fk, fc] : fb.terms()) {
          auto lam = ak.lambda;
          for (std::size_t j = 0; j < fk.lambda.size(); ++j) lam[static_cast<std::size_t>(off) + j] += fk.lambda[j];
          std::vector<int> p(static_cast<std::size_t>(r));
          for (int i = 1; i <= r; ++i) p[static_cast<std::size_t>(i - 1)] = i;
          for (int i = 0; i < shape.parts()[k]; ++i)
            p[static_cast<std::size_t>(off + i)] = off + fk.x.perm()[static_cast<std::size_t>(i)];
          next.add_term(lam, ak.x * AffinePermutation::finite(p), ac * fc);
        }
      acc = std::move(next);
    }
    total = total + acc;
  }
  return from_bernstein(total);
}

}  // namespace heckeforge::hecke

#pragma once

#include <map>
#include <string>
#include <vector>

#include "heckeforge/hecke/algebra.hpp"

namespace heckeforge::hecke {

using weyl::LeviShape;

// H_{r_1}(q) (x) ... (x) H_{r_l}(q) inside H_r(q).
class LeviAlgebra {
 public:
  LeviAlgebra(const HeckeAlgebra& ambient, LeviShape shape);
  const HeckeAlgebra& ambient() const { return ambient_; }
  const LeviShape& shape() const { return shape_; }
  const HeckeAlgebra& factor(std::size_t k) const { return factors_[k]; }
  std::size_t size() const { return factors_.size(); }
  friend bool operator==(const LeviAlgebra& a, const LeviAlgebra& b) {
    return a.ambient_ == b.ambient_ && a.shape_ == b.shape_;
  }

 private:
  HeckeAlgebra ambient_;
  LeviShape shape_;
  std::vector<HeckeAlgebra> factors_;
};

// Sum of c * T_{w_1} (x) ... (x) T_{w_l}.
class LeviElement {
 public:
  using Key = std::vector<AffinePermutation>;
  using Terms = std::map<Key, Scalar>;

  explicit LeviElement(const LeviAlgebra& l) : l_(l) {}
  static LeviElement one(const LeviAlgebra& l);
  // Pure tensor of factor elements.
  static LeviElement tensor(const LeviAlgebra& l, const std::vector<HeckeElement>& factors);

  const LeviAlgebra& algebra() const { return l_; }
  const Terms& terms() const { return terms_; }
  void add_term(const Key& w, const Scalar& c);

  friend LeviElement operator+(const LeviElement& a, const LeviElement& b);
  friend LeviElement operator*(const LeviElement& a, const LeviElement& b);

 private:
  LeviAlgebra l_;
  Terms terms_;
};

HeckeElement levi_embed(const LeviAlgebra& l, const LeviElement& x);

}  // namespace heckeforge::hecke

#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "heckeforge/exact/matrix.hpp"
#include "heckeforge/hecke/algebra.hpp"
#include "heckeforge/hecke/levi.hpp"

namespace heckeforge::hecke {

using exact::Matrix;

// Right module: row vectors, v . (h1 h2) = (v . h1) . h2, so A_{h1 h2} = A_{h1} A_{h2}.
//
// With half_twist set, the stored rotation matrix P is normalized so that the
// rotation truly acts by sqrt(q) * P. The generators T_i are unaffected.
class HModule {
 public:
  // gens holds A_{T_0}, ..., A_{T_{r-1}} (empty for r = 1).
  HModule(const HeckeAlgebra& alg, std::vector<Matrix> gens, Matrix rotation, bool half_twist = false,
          std::optional<Matrix> rotation_inverse = std::nullopt);
  // From A_{T_1}..A_{T_{r-1}} and the rotation; A_{T_0} = P A_{T_{r-1}} P^{-1}.
  static HModule from_finite(const HeckeAlgebra& alg, const std::vector<Matrix>& finite, const Matrix& rotation,
                             bool half_twist = false, std::optional<Matrix> rotation_inverse = std::nullopt);
  // One-dimensional: every T_i acts by t (q or -1), the rotation by z.
  static HModule character(const HeckeAlgebra& alg, const Scalar& t, const Scalar& z);

  const HeckeAlgebra& algebra() const { return alg_; }
  std::size_t dim() const { return dim_; }
  const Field& field() const { return alg_.field(); }
  const std::vector<Matrix>& generators() const { return gens_; }
  const Matrix& rotation() const { return rot_; }
  const Matrix& rotation_inverse() const { return rot_inv_; }
  bool half_twist() const { return half_twist_; }
  // Generators and rotation: everything a submodule must be closed under.
  std::vector<Matrix> closure_generators() const;

  // Stored matrix of T_w: product of the stored letter matrices of a reduced word.
  Matrix basis_matrix(const AffinePermutation& w) const;
  // True action of an element; odd rotation degree under half_twist needs sqrt(q).
  Matrix action(const HeckeElement& x) const;
  // Stored matrices of theta_{e_1}, ..., theta_{e_r} (true = sqrt(q)^half_twist * stored).
  const std::vector<Matrix>& theta_matrices() const;

  // Weight vectors (omega_1..omega_r) expected among the stored theta eigenvalues.
  const std::vector<std::vector<Scalar>>& weight_candidates() const { return weights_; }
  HModule with_weight_candidates(std::vector<std::vector<Scalar>> w) const;

 private:
  struct ThetaCache;
  HeckeAlgebra alg_;
  std::size_t dim_ = 0;
  std::vector<Matrix> gens_;
  Matrix rot_, rot_inv_;
  bool half_twist_ = false;
  std::vector<std::vector<Scalar>> weights_;
  std::shared_ptr<ThetaCache> theta_;
};

// Direct sum.
HModule direct_sum(const HModule& a, const HModule& b);
// Entrywise q = c; relations re-checked.
HModule specialize(const HModule& m, const Rational& c);
// Twist by the character T_i -> 1, pi -> z (z a unit).
HModule twist_rotation(const HModule& m, const Scalar& z);

// Module over a Levi subalgebra: one action of each factor algebra on a common
// space, pairwise commuting.
class LeviModule {
 public:
  LeviModule(const LeviAlgebra& l, std::vector<HModule> factors);
  // Outer tensor product of factor modules.
  static LeviModule tensor(const LeviAlgebra& l, const std::vector<HModule>& factors);

  const LeviAlgebra& algebra() const { return l_; }
  std::size_t dim() const { return dim_; }
  const std::vector<HModule>& factors() const { return factors_; }
  const std::vector<std::vector<Scalar>>& weight_candidates() const { return weights_; }

 private:
  LeviAlgebra l_;
  std::size_t dim_ = 0;
  std::vector<HModule> factors_;
  std::vector<std::vector<Scalar>> weights_;
};

// Normalized induction V (x)_{H_L} H on the basis v (x) T_w, w a minimal coset representative.
HModule induce(const LeviModule& v);
// Induction from the characters theta_{e_i} -> z_i of the torus.
HModule principal_series(const HeckeAlgebra& alg, const std::vector<Scalar>& z);

}  // namespace heckeforge::hecke

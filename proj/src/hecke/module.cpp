#include "heckeforge/hecke/module.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "heckeforge/error.hpp"
#include "heckeforge/hecke/bernstein.hpp"

namespace heckeforge::hecke {

struct HModule::ThetaCache {
  std::once_flag once;
  std::vector<Matrix> mats;
};

namespace {

void check_relations(const HeckeAlgebra& alg, const std::vector<Matrix>& g, const Matrix& p, const Matrix& pinv) {
  int r = alg.rank();
  std::size_t n = p.rows();
  Matrix id = Matrix::identity(n, alg.field());
  if (!(p * pinv).is_identity()) throw RelationViolation("rotation inverse does not invert the rotation");
  Scalar q = alg.q();
  Scalar one = Scalar::one(alg.field());
  for (int i = 0; i < static_cast<int>(g.size()); ++i) {
    const Matrix& a = g[static_cast<std::size_t>(i)];
    if (!(a * a - a.scaled(q - one) - id.scaled(q)).is_zero())
      throw RelationViolation("quadratic relation fails for T_" + std::to_string(i));
  }
  if (r >= 3) {
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j) {
        const Matrix& a = g[static_cast<std::size_t>(i)];
        const Matrix& b = g[static_cast<std::size_t>(j)];
        bool adjacent = j == i + 1 || (i == 0 && j == r - 1);
        Matrix ab = a * b;
        if (adjacent) {
          if (!(ab * a == b * a * b))
            throw RelationViolation("braid relation fails for T_" + std::to_string(i) + ", T_" + std::to_string(j));
        } else if (!(ab == b * a)) {
          throw RelationViolation("T_" + std::to_string(i) + " and T_" + std::to_string(j) + " do not commute");
        }
      }
  }
  for (int i = 0; i < static_cast<int>(g.size()); ++i) {
    const Matrix& a = g[static_cast<std::size_t>(i)];
    const Matrix& b = g[static_cast<std::size_t>((i + 1) % r)];
    if (!(p * a == b * p))
      throw RelationViolation("rotation does not conjugate T_" + std::to_string(i) + " to T_" + std::to_string((i + 1) % r));
  }
}

Matrix generator_inverse(const Matrix& a, const Scalar& q) {
  Scalar qi = q.inverse();
  Matrix id = Matrix::identity(a.rows(), a.field());
  return a.scaled(qi) + id.scaled(qi - Scalar::one(a.field()));
}

}  // namespace

HModule::HModule(const HeckeAlgebra& alg, std::vector<Matrix> gens, Matrix rotation, bool half_twist,
                 std::optional<Matrix> rotation_inverse)
    : alg_(alg), gens_(std::move(gens)), half_twist_(half_twist), theta_(std::make_shared<ThetaCache>()) {
  int r = alg_.rank();
  if (r == 1 ? !gens_.empty() : static_cast<int>(gens_.size()) != r)
    throw ShapeMismatch("expected " + std::to_string(r == 1 ? 0 : r) + " generator matrices");
  if (!rotation.is_square() || rotation.rows() == 0) throw ShapeMismatch("rotation matrix must be square and nonempty");
  dim_ = rotation.rows();
  rot_ = rotation.to_field(alg_.field());
  for (auto& g : gens_) {
    if (g.rows() != dim_ || g.cols() != dim_) throw ShapeMismatch("generator matrix has the wrong size");
    g = g.to_field(alg_.field());
  }
  if (rotation_inverse) {
    if (rotation_inverse->rows() != dim_ || rotation_inverse->cols() != dim_) throw ShapeMismatch("rotation inverse has the wrong size");
    rot_inv_ = rotation_inverse->to_field(alg_.field());
  } else {
    try {
      rot_inv_ = exact::inverse(rot_);
    } catch (const DivisionByZero&) {
      throw RelationViolation("rotation matrix is not invertible");
    }
  }
  check_relations(alg_, gens_, rot_, rot_inv_);
}

HModule HModule::from_finite(const HeckeAlgebra& alg, const std::vector<Matrix>& finite, const Matrix& rotation,
                             bool half_twist, std::optional<Matrix> rotation_inverse) {
  int r = alg.rank();
  if (static_cast<int>(finite.size()) != r - 1) throw ShapeMismatch("expected r - 1 finite generator matrices");
  if (r == 1) return HModule(alg, {}, rotation, half_twist, rotation_inverse);
  Matrix p = rotation.to_field(alg.field());
  Matrix pinv;
  if (rotation_inverse) {
    pinv = rotation_inverse->to_field(alg.field());
  } else {
    try {
      pinv = exact::inverse(p);
    } catch (const DivisionByZero&) {
      throw RelationViolation("rotation matrix is not invertible");
    }
  }
  std::vector<Matrix> gens;
  gens.push_back(p * finite.back().to_field(alg.field()) * pinv);
  for (const auto& m : finite) gens.push_back(m);
  return HModule(alg, std::move(gens), p, half_twist, pinv);
}

HModule HModule::character(const HeckeAlgebra& alg, const Scalar& t, const Scalar& z) {
  int m = alg.rank();
  Scalar tf = t.to_field(alg.field()), zf = z.to_field(alg.field());
  if (m >= 2 && !(tf == alg.q()) && !(tf == Scalar(Rational(-1)).to_field(alg.field())))
    throw InvalidArgument("a character sends T_i to q or -1");
  if (zf.is_zero()) throw InvalidArgument("rotation value must be nonzero");
  std::vector<Matrix> gens;
  if (m >= 2)
    for (int i = 0; i < m; ++i) gens.push_back(Matrix::scalar(1, tf));
  HModule out(alg, std::move(gens), Matrix::scalar(1, zf));
  std::vector<Scalar> w;
  for (int j = 1; j <= m; ++j) w.push_back(zf * tf.pow(m - 2 * j + 1));
  out.weights_.push_back(std::move(w));
  return out;
}

std::vector<Matrix> HModule::closure_generators() const {
  std::vector<Matrix> g = gens_;
  g.push_back(rot_);
  return g;
}

Matrix HModule::basis_matrix(const AffinePermutation& w) const {
  if (w.rank() != alg_.rank()) throw InvalidArgument("basis element rank differs from module rank");
  auto rw = weyl::reduced_word(w);
  Matrix m = Matrix::identity(dim_, field());
  const Matrix& step = rw.rotation_power >= 0 ? rot_ : rot_inv_;
  for (long k = 0; k < std::abs(rw.rotation_power); ++k) m = m * step;
  for (int i : rw.word) m = m * gens_[static_cast<std::size_t>(i)];
  return m;
}

Matrix HModule::action(const HeckeElement& x) const {
  if (!(x.algebra() == alg_)) throw InvalidArgument("element and module belong to different algebras");
  Matrix out(dim_, dim_, field());
  for (const auto& [w, c] : x.terms()) {
    long d = w.rotation_degree();
    Scalar scale = c;
    if (half_twist_) {
      if (d % 2 != 0) {
        if (!alg_.sqrt_q()) throw UnsupportedField("rotation acts by sqrt(q) times a matrix; sqrt(q) is not in the field");
        scale = scale * alg_.sqrt_q()->pow(d);
      } else {
        scale = scale * alg_.q().pow(d / 2);
      }
    }
    out += basis_matrix(w).scaled(scale);
  }
  return out;
}

const std::vector<Matrix>& HModule::theta_matrices() const {
  std::call_once(theta_->once, [this] {
    int r = alg_.rank();
    const Scalar& q = alg_.q();
    auto mat_inv = [&](const AffinePermutation& w) {
      auto rw = weyl::reduced_word(w);
      Matrix m = Matrix::identity(dim_, field());
      for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) m = m * generator_inverse(gens_[static_cast<std::size_t>(*it)], q);
      const Matrix& step = rw.rotation_power >= 0 ? rot_inv_ : rot_;
      for (long k = 0; k < std::abs(rw.rotation_power); ++k) m = m * step;
      return m;
    };
    std::vector<long> mu(static_cast<std::size_t>(r), 0);
    Matrix prev_inv = Matrix::identity(dim_, field());
    for (int j = 0; j < r; ++j) {
      mu[static_cast<std::size_t>(j)] = 1;
      auto t = AffinePermutation::translation(mu);
      theta_->mats.push_back(basis_matrix(t) * prev_inv);
      prev_inv = mat_inv(t);
    }
  });
  return theta_->mats;
}

HModule HModule::with_weight_candidates(std::vector<std::vector<Scalar>> w) const {
  HModule out = *this;
  for (auto& v : w) {
    if (static_cast<int>(v.size()) != alg_.rank()) throw ShapeMismatch("weight vector length differs from rank");
    for (auto& s : v) s = s.to_field(field());
  }
  out.weights_ = std::move(w);
  return out;
}

namespace {

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

}  // namespace

HModule direct_sum(const HModule& a, const HModule& b) {
  if (!(a.algebra() == b.algebra())) throw InvalidArgument("direct sum of modules over different algebras");
  if (a.half_twist() != b.half_twist()) throw InvalidArgument("direct sum needs matching rotation normalization");
  std::vector<Matrix> g;
  for (std::size_t i = 0; i < a.generators().size(); ++i) g.push_back(block_diag(a.generators()[i], b.generators()[i]));
  auto out = HModule(a.algebra(), std::move(g), block_diag(a.rotation(), b.rotation()), a.half_twist(),
                     block_diag(a.rotation_inverse(), b.rotation_inverse()));
  auto w = a.weight_candidates();
  for (const auto& x : b.weight_candidates()) w.push_back(x);
  return out.with_weight_candidates(std::move(w));
}

HModule specialize(const HModule& m, const Rational& c) {
  if (!m.algebra().is_generic()) throw InvalidArgument("specialize expects a module over Q(q)");
  auto alg = HeckeAlgebra::specialized(m.algebra().rank(), c);
  std::vector<Matrix> g;
  for (const auto& a : m.generators()) g.push_back(exact::specialize_q(a, c));
  HModule out(alg, std::move(g), exact::specialize_q(m.rotation(), c), m.half_twist(),
              exact::specialize_q(m.rotation_inverse(), c));
  std::vector<std::vector<Scalar>> w;
  for (const auto& v : m.weight_candidates()) {
    std::vector<Scalar> s;
    for (const auto& x : v) s.push_back(Scalar(exact::specialize_q(x, c)));
    w.push_back(std::move(s));
  }
  return out.with_weight_candidates(std::move(w));
}

HModule twist_rotation(const HModule& m, const Scalar& z) {
  if (z.is_zero()) throw InvalidArgument("rotation twist must be nonzero");
  HModule out(m.algebra(), m.generators(), m.rotation().scaled(z), m.half_twist(), m.rotation_inverse().scaled(z.inverse()));
  auto w = m.weight_candidates();
  for (auto& v : w)
    for (auto& s : v) s = s * z;
  return out.with_weight_candidates(std::move(w));
}

LeviModule::LeviModule(const LeviAlgebra& l, std::vector<HModule> factors) : l_(l), factors_(std::move(factors)) {
  if (factors_.size() != l_.size()) throw ShapeMismatch("expected one factor action per Levi block");
  dim_ = factors_.front().dim();
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (!(factors_[k].algebra() == l_.factor(k))) throw ShapeMismatch("factor action over the wrong algebra");
    if (factors_[k].dim() != dim_) throw ShapeMismatch("factor actions on spaces of different dimension");
  }
  for (std::size_t k = 0; k < factors_.size(); ++k)
    for (std::size_t k2 = k + 1; k2 < factors_.size(); ++k2)
      for (const auto& a : factors_[k].closure_generators())
        for (const auto& b : factors_[k2].closure_generators())
          if (!(a * b == b * a)) throw RelationViolation("actions of different Levi factors do not commute");
  if (dim_ == 1) {
    std::vector<Scalar> w;
    for (const auto& f : factors_) {
      if (f.weight_candidates().empty()) {
        w.clear();
        break;
      }
      for (const auto& s : f.weight_candidates().front()) w.push_back(s);
    }
    if (!w.empty()) weights_.push_back(std::move(w));
  }
}

LeviModule LeviModule::tensor(const LeviAlgebra& l, const std::vector<HModule>& factors) {
  if (factors.size() != l.size()) throw ShapeMismatch("expected one factor module per Levi block");
  std::size_t total = 1;
  for (const auto& f : factors) total *= f.dim();
  const Field& fld = l.ambient().field();
  std::vector<HModule> placed;
  std::size_t before = 1;
  for (const auto& f : factors) {
    std::size_t after = total / (before * f.dim());
    auto place = [&](const Matrix& a) {
      return Matrix::kron(Matrix::identity(before, fld), Matrix::kron(a.to_field(fld), Matrix::identity(after, fld)));
    };
    std::vector<Matrix> g;
    for (const auto& a : f.generators()) g.push_back(place(a));
    placed.emplace_back(f.algebra(), std::move(g), place(f.rotation()), f.half_twist(), place(f.rotation_inverse()));
    before *= f.dim();
  }
  LeviModule out(l, std::move(placed));
  if (out.weights_.empty()) {
    std::vector<Scalar> w;
    for (const auto& f : factors) {
      if (f.weight_candidates().empty()) return out;
      for (const auto& s : f.weight_candidates().front()) w.push_back(s.to_field(fld));
    }
    out.weights_.push_back(std::move(w));
  }
  return out;
}

namespace {

struct TableEntry {
  std::size_t from, to;
  std::vector<long> lambda;
  AffinePermutation y;
  exact::RatFunc coef;
};

// For generator index g: 0..r-2 is T_{g+1}, r-1 the rotation, r its inverse.
struct InductionTable {
  std::vector<AffinePermutation> reps;
  std::vector<std::vector<TableEntry>> by_generator;
};

const InductionTable& induction_table(const LeviShape& shape) {
  static std::mutex mu;
  static std::map<std::vector<int>, InductionTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(shape.parts());
  if (it != cache.end()) return it->second;

  int r = shape.rank();
  auto G = HeckeAlgebra::generic(r);
  InductionTable t;
  t.reps = weyl::min_coset_reps(shape);
  std::map<AffinePermutation, std::size_t> index;
  for (std::size_t a = 0; a < t.reps.size(); ++a) index.emplace(t.reps[a], a);
  t.by_generator.resize(static_cast<std::size_t>(r + 1));
  std::vector<long> zero(static_cast<std::size_t>(r), 0);
  for (std::size_t a = 0; a < t.reps.size(); ++a) {
    const auto& w = t.reps[a];
    auto word = weyl::reduced_word(w).word;
    auto left_mul_w = [&](BernsteinElement e) {
      for (auto i = word.rbegin(); i != word.rend(); ++i) e = e.left_mul_simple(*i);
      return e;
    };
    for (int g = 0; g <= r; ++g) {
      BernsteinElement e(G);
      if (g < r - 1) {
        e = BernsteinElement::term(G, zero, w).right_mul_simple(g + 1);
      } else {
        e = left_mul_w(BernsteinElement::one(G).left_mul_rotation(g == r - 1 ? 1 : -1));
      }
      for (const auto& [key, c] : e.terms()) {
        auto split = weyl::split_coset(shape, key.x);
        t.by_generator[static_cast<std::size_t>(g)].push_back(
            {a, index.at(split.rep), key.lambda, split.levi_part, c.as_ratfunc()});
      }
    }
  }
  return cache.emplace(shape.parts(), std::move(t)).first->second;
}

Scalar evaluate(const exact::RatFunc& f, const HeckeAlgebra& alg) {
  if (alg.is_generic()) return Scalar(f);
  return Scalar(f.eval(*alg.q_value())).to_field(alg.field());
}

}  // namespace

HModule induce(const LeviModule& v) {
  const LeviAlgebra& l = v.algebra();
  const LeviShape& shape = l.shape();
  const HeckeAlgebra& alg = l.ambient();
  int r = shape.rank();
  std::size_t nf = shape.size();
  const Field& fld = alg.field();

  // Normalization: factor k's rotation is scaled by q^{c_k}, c_k = (r - m_k)/2 - o_k.
  std::vector<long> e(nf);
  for (std::size_t k = 0; k < nf; ++k)
    e[k] = (r - shape.parts()[k]) - 2L * shape.offset(k) + (v.factors()[k].half_twist() ? 1 : 0);
  bool uniform = std::all_of(e.begin(), e.end(), [&](long x) { return ((x - e[0]) % 2) == 0; });
  long H = 0;
  std::vector<Scalar> scale(nf);
  if (uniform) {
    H = ((e[0] % 2) + 2) % 2;
    for (std::size_t k = 0; k < nf; ++k) scale[k] = alg.q().pow((e[k] - H) / 2);
  } else {
    if (!alg.sqrt_q()) throw UnsupportedField("normalized induction needs sqrt(q) in the coefficient field");
    for (std::size_t k = 0; k < nf; ++k) scale[k] = alg.sqrt_q()->pow(e[k]);
  }

  // Scaled theta matrices of each factor and their inverses, indexed by ambient position.
  std::size_t n = v.dim();
  std::vector<Matrix> th(static_cast<std::size_t>(r)), th_inv(static_cast<std::size_t>(r));
  for (std::size_t k = 0; k < nf; ++k) {
    const auto& f = v.factors()[k];
    const auto& mats = f.theta_matrices();
    for (int j = 0; j < shape.parts()[k]; ++j) {
      auto pos = static_cast<std::size_t>(shape.offset(k) + j);
      th[pos] = mats[static_cast<std::size_t>(j)].scaled(scale[k]);
      th_inv[pos] = (n == 1) ? Matrix::scalar(1, th[pos].at(0, 0).inverse()) : exact::inverse(th[pos]);
    }
  }

  const auto& table = induction_table(shape);
  std::size_t N = table.reps.size();
  std::map<std::pair<std::vector<long>, AffinePermutation>, Matrix> memo;
  auto levi_matrix = [&](const std::vector<long>& lam, const AffinePermutation& y) -> const Matrix& {
    auto key = std::make_pair(lam, y);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Matrix m = Matrix::identity(n, fld);
    for (std::size_t p = 0; p < lam.size(); ++p)
      for (long s = 0; s < std::abs(lam[p]); ++s) m = m * (lam[p] > 0 ? th[p] : th_inv[p]);
    for (int i : weyl::reduced_word(y).word) {
      std::size_t k = shape.block_of(i);
      m = m * v.factors()[k].generators()[static_cast<std::size_t>(i - shape.offset(k))];
    }
    return memo.emplace(key, std::move(m)).first->second;
  };

  std::vector<Matrix> out;
  for (int g = 0; g <= r; ++g) {
    Matrix m(n * N, n * N, fld);
    std::map<std::pair<std::size_t, std::size_t>, Matrix> blocks;
    for (const auto& en : table.by_generator[static_cast<std::size_t>(g)]) {
      Matrix contrib = levi_matrix(en.lambda, en.y).scaled(evaluate(en.coef, alg));
      auto key = std::make_pair(en.from, en.to);
      auto it = blocks.find(key);
      if (it == blocks.end()) blocks.emplace(key, std::move(contrib));
      else it->second += contrib;
    }
    for (const auto& [key, b] : blocks) m.set_block(key.first * n, key.second * n, b);
    out.push_back(std::move(m));
  }
  Matrix rot = out[static_cast<std::size_t>(r - 1)], rot_inv = out[static_cast<std::size_t>(r)];
  out.resize(static_cast<std::size_t>(r - 1));
  HModule result = HModule::from_finite(alg, out, rot, H != 0, rot_inv);

  std::vector<std::vector<Scalar>> weights;
  if (!v.weight_candidates().empty()) {
    auto w = v.weight_candidates().front();
    for (std::size_t k = 0; k < nf; ++k)
      for (int j = 0; j < shape.parts()[k]; ++j) {
        auto pos = static_cast<std::size_t>(shape.offset(k) + j);
        w[pos] = w[pos] * scale[k];
      }
    weights.push_back(w);
    if (static_cast<int>(nf) == r) {
      // Principal series: the full orbit omega'_i = q^{s(i) - i} omega_{s(i)}.
      std::vector<int> s(static_cast<std::size_t>(r));
      std::iota(s.begin(), s.end(), 0);
      while (std::next_permutation(s.begin(), s.end())) {
        std::vector<Scalar> x(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i)
          x[static_cast<std::size_t>(i)] = alg.q().pow(s[static_cast<std::size_t>(i)] - i) * w[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])];
        weights.push_back(std::move(x));
      }
    }
  }
  return result.with_weight_candidates(std::move(weights));
}

HModule principal_series(const HeckeAlgebra& alg, const std::vector<Scalar>& z) {
  int r = alg.rank();
  if (static_cast<int>(z.size()) != r) throw ShapeMismatch("principal series needs r parameters");
  LeviAlgebra l(alg, LeviShape(std::vector<int>(static_cast<std::size_t>(r), 1)));
  std::vector<HModule> factors;
  for (int i = 0; i < r; ++i) {
    if (z[static_cast<std::size_t>(i)].is_zero()) throw InvalidArgument("principal series parameter is zero");
    factors.push_back(HModule::character(l.factor(static_cast<std::size_t>(i)), alg.q(), z[static_cast<std::size_t>(i)]));
  }
  return induce(LeviModule::tensor(l, factors));
}

}  // namespace heckeforge::hecke

#include "heckeforge/exact/matrix.hpp"

#include <sstream>

#include "heckeforge/error.hpp"

namespace heckeforge::exact {

namespace {

template <class T>
T zero_of(const Field& f) {
  return std::get<T>(Scalar::zero(f).value());
}

template <class T>
T one_of(const Field& f) {
  return std::get<T>(Scalar::one(f).value());
}

inline const Rational& conj_of(const Rational& x) { return x; }
inline const RatFunc& conj_of(const RatFunc& x) { return x; }
inline Cyclotomic conj_of(const Cyclotomic& x) { return x.conj(); }

Matrix::Storage make_storage(const Field& f, std::size_t n) {
  switch (f.kind) {
    case Field::Kind::Rational: return std::vector<Rational>(n);
    case Field::Kind::RatFunc: return std::vector<RatFunc>(n);
    case Field::Kind::Cyclotomic: return std::vector<Cyclotomic>(n, Cyclotomic(f.conductor));
  }
  return {};
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatch(std::string(what) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

// Bring two matrices into a common field.
std::pair<Matrix, Matrix> unify(const Matrix& a, const Matrix& b) {
  if (a.field() == b.field()) return {a, b};
  Field f = join(a.field(), b.field());
  return {a.to_field(f), b.to_field(f)};
}

template <class T>
struct Dense {
  std::vector<T>& d;
  std::size_t cols;
  T& operator()(std::size_t i, std::size_t j) { return d[i * cols + j]; }
};

// In-place Gauss-Jordan on the first `limit` columns; returns pivot columns.
template <class T>
std::vector<std::size_t> gauss_jordan(std::vector<T>& a, std::size_t rows, std::size_t cols, std::size_t limit) {
  Dense<T> m{a, cols};
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    T inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Semi-echelon basis: rows with distinct pivot columns (entry 1), each row zero
// at the pivots of earlier rows.
template <class T>
struct Echelon {
  std::size_t n;
  std::vector<std::vector<T>> rows;
  std::vector<std::size_t> pivots;

  // Reduces v in place; returns true if v became zero.
  bool reduce(std::vector<T>& v) const {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const T& c = v[pivots[k]];
      if (c.is_zero()) continue;
      T f = c;
      const auto& b = rows[k];
      for (std::size_t j = 0; j < n; ++j)
        if (!b[j].is_zero()) v[j] -= f * b[j];
    }
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }

  // Adds v if independent; returns whether it was added.
  bool add(std::vector<T> v) {
    if (reduce(v)) return false;
    std::size_t p = 0;
    while (v[p].is_zero()) ++p;
    T inv = v[p].inverse();
    for (auto& x : v)
      if (!x.is_zero()) x *= inv;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

template <class T>
std::vector<T> row_times(const std::vector<T>& v, const std::vector<T>& m, std::size_t n, const T& zero) {
  std::vector<T> out(n, zero);
  for (std::size_t k = 0; k < n; ++k) {
    if (v[k].is_zero()) continue;
    const T& a = v[k];
    for (std::size_t j = 0; j < n; ++j) {
      const T& b = m[k * n + j];
      if (!b.is_zero()) out[j] += a * b;
    }
  }
  return out;
}

template <class T>
std::vector<T> get_row(const std::vector<T>& d, std::size_t cols, std::size_t i) {
  return std::vector<T>(d.begin() + static_cast<std::ptrdiff_t>(i * cols), d.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& f)
    : field_(f), rows_(rows), cols_(cols), data_(make_storage(f, rows * cols)) {}

Matrix Matrix::identity(std::size_t n, const Field& f) { return scalar(n, Scalar::one(f)); }

Matrix Matrix::scalar(std::size_t n, const Scalar& s) {
  Matrix m(n, n, s.field());
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, s);
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d) {
  Field f;
  for (const auto& s : d) f = join(f, s.field());
  Matrix m(d.size(), d.size(), f);
  for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  Field f;
  for (const auto& r : rows)
    for (const auto& s : r) f = join(f, s.field());
  return from_rows(rows, f);
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, const Field& f) {
  std::size_t nc = rows.empty() ? 0 : rows[0].size();
  Matrix m(rows.size(), nc, f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw ShapeMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::row_vector(const std::vector<Scalar>& v, const Field& f) { return from_rows({v}, f); }

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw ShapeMismatch("matrix index out of range");
  return std::visit([&](const auto& d) -> Scalar { return d[i * cols_ + j]; }, data_);
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& s) {
  if (i >= rows_ || j >= cols_) throw ShapeMismatch("matrix index out of range");
  Scalar v = s.to_field(field_);
  std::visit(
      [&](auto& d) {
        using T = typename std::decay_t<decltype(d)>::value_type;
        d[i * cols_ + j] = std::get<T>(v.value());
      },
      data_);
}

Matrix Matrix::to_field(const Field& f) const {
  if (f == field_) return *this;
  Matrix m(rows_, cols_, f);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
  return m;
}

Matrix operator+(const Matrix& a0, const Matrix& b0) {
  require_same_shape(a0, b0, "matrix sum");
  auto [a, b] = unify(a0, b0);
  std::visit(
      [&](auto& d) {
        using V = std::decay_t<decltype(d)>;
        const auto& e = std::get<V>(b.storage());
        for (std::size_t k = 0; k < d.size(); ++k)
          if (!e[k].is_zero()) d[k] += e[k];
      },
      a.storage());
  return a;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  std::visit(
      [](auto& d) {
        for (auto& x : d)
          if (!x.is_zero()) x = -x;
      },
      m.data_);
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a0, const Matrix& b0) {
  if (a0.cols() != b0.rows())
    throw ShapeMismatch("matrix product: " + std::to_string(a0.cols()) + " vs " + std::to_string(b0.rows()));
  auto [a, b] = unify(a0, b0);
  Matrix c(a.rows(), b.cols(), a.field());
  std::size_t n = a.cols(), m = b.cols();
  std::visit(
      [&](auto& out) {
        using V = std::decay_t<decltype(out)>;
        const auto& x = std::get<V>(a.storage());
        const auto& y = std::get<V>(b.storage());
        for (std::size_t i = 0; i < a.rows(); ++i)
          for (std::size_t k = 0; k < n; ++k) {
            const auto& s = x[i * n + k];
            if (s.is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) {
              const auto& t = y[k * m + j];
              if (!t.is_zero()) out[i * m + j] += s * t;
            }
          }
      },
      c.storage());
  return c;
}

Matrix Matrix::scaled(const Scalar& s0) const {
  Field f = join(field_, s0.field());
  Matrix m = to_field(f);
  Scalar s = s0.to_field(f);
  std::visit(
      [&](auto& d) {
        using T = typename std::decay_t<decltype(d)>::value_type;
        const T& c = std::get<T>(s.value());
        for (auto& x : d)
          if (!x.is_zero()) x = x * c;
      },
      m.data_);
  return m;
}

bool operator==(const Matrix& a0, const Matrix& b0) {
  if (a0.rows() != b0.rows() || a0.cols() != b0.cols()) return false;
  Field f;
  try {
    f = join(a0.field(), b0.field());
  } catch (const FieldMismatch&) {
    return false;
  }
  Matrix a = a0.to_field(f), b = b0.to_field(f);
  return a.storage() == b.storage();
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  std::visit(
      [&](auto& out) {
        using V = std::decay_t<decltype(out)>;
        const auto& d = std::get<V>(data_);
        for (std::size_t i = 0; i < rows_; ++i)
          for (std::size_t j = 0; j < cols_; ++j) out[j * rows_ + i] = d[i * cols_ + j];
      },
      t.data_);
  return t;
}

Matrix Matrix::conj() const {
  if (field_.kind != Field::Kind::Cyclotomic) return *this;
  Matrix m = *this;
  for (auto& x : std::get<std::vector<Cyclotomic>>(m.data_)) x = x.conj();
  return m;
}

Matrix Matrix::conj_transpose() const { return transpose().conj(); }

Matrix Matrix::pow(long e) const {
  if (!is_square()) throw ShapeMismatch("power of a non-square matrix");
  if (e < 0) return inverse(*this).pow(-e);
  Matrix result = identity(rows_, field_), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Matrix::is_zero() const {
  return std::visit(
      [](const auto& d) {
        for (const auto& x : d)
          if (!x.is_zero()) return false;
        return true;
      },
      data_);
}

bool Matrix::is_identity() const { return is_square() && *this == identity(rows_, field_); }

bool Matrix::is_hermitian() const { return is_square() && *this == conj_transpose(); }

Matrix Matrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeMismatch("submatrix out of range");
  Matrix s(nr, nc, field_);
  std::visit(
      [&](auto& out) {
        using V = std::decay_t<decltype(out)>;
        const auto& d = std::get<V>(data_);
        for (std::size_t i = 0; i < nr; ++i)
          for (std::size_t j = 0; j < nc; ++j) out[i * nc + j] = d[(r0 + i) * cols_ + c0 + j];
      },
      s.data_);
  return s;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b0) {
  if (r0 + b0.rows() > rows_ || c0 + b0.cols() > cols_) throw ShapeMismatch("block out of range");
  Matrix b = b0.to_field(field_);
  std::visit(
      [&](auto& d) {
        using V = std::decay_t<decltype(d)>;
        const auto& s = std::get<V>(b.data_);
        for (std::size_t i = 0; i < b.rows_; ++i)
          for (std::size_t j = 0; j < b.cols_; ++j) d[(r0 + i) * cols_ + c0 + j] = s[i * b.cols_ + j];
      },
      data_);
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) return Matrix();
  Field f = parts[0].field();
  std::size_t nr = 0;
  for (const auto& p : parts) {
    if (p.cols() != parts[0].cols()) throw ShapeMismatch("vstack column mismatch");
    f = join(f, p.field());
    nr += p.rows();
  }
  Matrix m(nr, parts[0].cols(), f);
  std::size_t r = 0;
  for (const auto& p : parts) {
    m.set_block(r, 0, p);
    r += p.rows();
  }
  return m;
}

Matrix Matrix::kron(const Matrix& a0, const Matrix& b0) {
  auto [a, b] = unify(a0, b0);
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Scalar s = a.at(i, j);
      if (s.is_zero()) continue;
      k.set_block(i * b.rows(), j * b.cols(), b.scaled(s));
    }
  return k;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j).to_string();
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
  }
  os << "]";
  return os.str();
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots) {
  Matrix r = m;
  std::visit(
      [&](auto& d) {
        auto p = gauss_jordan(d, r.rows(), r.cols(), r.cols());
        if (pivots) *pivots = std::move(p);
      },
      r.storage());
  return r;
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> p;
  rref(m, &p);
  return p.size();
}

Matrix kernel(const Matrix& m) {
  std::vector<std::size_t> piv;
  Matrix r = rref(m, &piv);
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : piv) is_pivot[p] = true;
  Matrix k(n - piv.size(), n, m.field());
  std::size_t row = 0;
  Scalar one = Scalar::one(m.field());
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    k.set(row, f, one);
    for (std::size_t i = 0; i < piv.size(); ++i) {
      Scalar c = r.at(i, f);
      if (!c.is_zero()) k.set(row, piv[i], -c);
    }
    ++row;
  }
  return k;
}

Matrix left_kernel(const Matrix& m) { return kernel(m.transpose()); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw ShapeMismatch("inverse of a non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(n, m.field()));
  std::size_t found = 0;
  std::visit([&](auto& d) { found = gauss_jordan(d, n, 2 * n, n).size(); }, aug.storage());
  if (found != n) throw DivisionByZero("matrix is singular");
  return aug.submatrix(0, n, n, n);
}

Scalar det(const Matrix& m) {
  if (!m.is_square()) throw ShapeMismatch("determinant of a non-square matrix");
  auto cp = charpoly(m);
  Scalar d = cp[0];
  return (m.rows() % 2) ? -d : d;
}

std::vector<Scalar> charpoly(const Matrix& m) {
  if (!m.is_square()) throw ShapeMismatch("characteristic polynomial of a non-square matrix");
  std::size_t n = m.rows();
  std::vector<Scalar> result;
  Matrix h = m;
  std::visit(
      [&](auto& d) {
        using T = typename std::decay_t<decltype(d)>::value_type;
        Dense<T> a{d, n};
        for (std::size_t k = 1; k + 1 < n; ++k) {
          std::size_t i = k;
          while (i < n && a(i, k - 1).is_zero()) ++i;
          if (i == n) continue;
          if (i != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(i, j), a(k, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(a(j, i), a(j, k));
          }
          T inv = a(k, k - 1).inverse();
          for (std::size_t j = k + 1; j < n; ++j) {
            if (a(j, k - 1).is_zero()) continue;
            T u = a(j, k - 1) * inv;
            for (std::size_t c = 0; c < n; ++c)
              if (!a(k, c).is_zero()) a(j, c) -= u * a(k, c);
            for (std::size_t r = 0; r < n; ++r)
              if (!a(r, j).is_zero()) a(r, k) += u * a(r, j);
          }
        }
        T zero = zero_of<T>(m.field()), one = one_of<T>(m.field());
        // p[k] has k+1 coefficients, low degree first.
        std::vector<std::vector<T>> p(n + 1);
        p[0] = {one};
        for (std::size_t k = 1; k <= n; ++k) {
          std::vector<T> cur(k + 1, zero);
          for (std::size_t j = 0; j < k; ++j) {
            cur[j + 1] += p[k - 1][j];
            cur[j] -= a(k - 1, k - 1) * p[k - 1][j];
          }
          T prod = one;
          for (std::size_t i = 1; i < k; ++i) {
            prod = prod * a(k - i, k - i - 1);
            if (prod.is_zero()) break;
            T c = a(k - 1 - i, k - 1) * prod;
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < p[k - 1 - i].size(); ++j) cur[j] -= c * p[k - 1 - i][j];
          }
          p[k] = std::move(cur);
        }
        for (auto& c : p[n]) result.emplace_back(c);
      },
      h.storage());
  return result;
}

Signature signature(const Matrix& h) {
  if (!h.is_square()) throw ShapeMismatch("signature of a non-square matrix");
  if (h.field().kind == Field::Kind::RatFunc) throw UnsupportedField("signature over Q(q) requires a specialization");
  if (!h.is_hermitian()) throw NotHermitian("signature of a non-Hermitian matrix");
  auto cp = charpoly(h);
  std::vector<Rational> c;
  for (const auto& s : cp) {
    if (!s.is_rational_value())
      throw UnsupportedField("characteristic polynomial has non-rational coefficient " + s.to_string());
    c.push_back(s.rational_value());
  }
  Signature sig;
  while (sig.n_zero < c.size() && c[sig.n_zero].is_zero()) ++sig.n_zero;
  std::vector<Rational> rest(c.begin() + static_cast<std::ptrdiff_t>(sig.n_zero), c.end());
  sig.n_plus = static_cast<std::size_t>(sign_changes(rest));
  for (std::size_t i = 1; i < rest.size(); i += 2) rest[i] = -rest[i];
  // Coefficient index shift by n_zero only flips all signs or none.
  sig.n_minus = static_cast<std::size_t>(sign_changes(rest));
  if (sig.n_plus + sig.n_minus + sig.n_zero != h.rows())
    throw Error("internal: signature counts do not add up; matrix not real-rooted");
  return sig;
}

std::vector<Matrix> solve_linear_subspace(const std::vector<LinearConstraint>& constraints) {
  if (constraints.empty()) throw InvalidArgument("no constraints given");
  std::size_t p = constraints[0].b.rows(), q = constraints[0].a.rows();
  Field f = constraints[0].a.field();
  for (const auto& c : constraints) {
    if (!c.a.is_square() || !c.b.is_square() || c.a.rows() != q || c.b.rows() != p)
      throw ShapeMismatch("constraint shapes are incompatible");
    f = join(f, join(c.a.field(), c.b.field()));
  }
  std::size_t n = p * q;
  std::vector<Matrix> basis;
  Matrix coeffs;
  std::visit(
      [&](auto& proto) {
        using T = typename std::decay_t<decltype(proto)>::value_type;
        T zero = zero_of<T>(f);
        Echelon<T> ech{n, {}, {}};
        for (const auto& c : constraints) {
          Matrix a = c.a.to_field(f), b = c.b.to_field(f);
          const auto& A = std::get<std::vector<T>>(a.storage());
          const auto& B = std::get<std::vector<T>>(b.storage());
          // (XA - BX)_{ij} = sum_k X_{ik} A_{kj} - sum_k B_{ik} X_{kj}
          for (std::size_t i = 0; i < p && ech.rows.size() < n; ++i)
            for (std::size_t j = 0; j < q && ech.rows.size() < n; ++j) {
              std::vector<T> row(n, zero);
              for (std::size_t k = 0; k < q; ++k)
                if (!A[k * q + j].is_zero()) row[i * q + k] += A[k * q + j];
              for (std::size_t k = 0; k < p; ++k)
                if (!B[i * p + k].is_zero()) row[k * q + j] -= B[i * p + k];
              ech.add(std::move(row));
            }
        }
        Matrix sys(ech.rows.size(), n, f);
        auto& d = std::get<std::vector<T>>(sys.storage());
        for (std::size_t r = 0; r < ech.rows.size(); ++r)
          for (std::size_t j = 0; j < n; ++j) d[r * n + j] = ech.rows[r][j];
        coeffs = sys;
      },
      Matrix(0, 0, f).storage());
  Matrix k = coeffs.rows() ? kernel(coeffs) : Matrix::identity(n, f);
  for (std::size_t r = 0; r < k.rows(); ++r) {
    Matrix x(p, q, f);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) x.set(i, j, k.at(r, i * q + j));
    basis.push_back(std::move(x));
  }
  for (const auto& x : basis)
    for (const auto& c : constraints)
      if (!(x * c.a == c.b * x)) throw Error("internal: solve_linear_subspace produced a non-solution");
  return basis;
}

Matrix span_closure(const Matrix& seeds, const std::vector<Matrix>& generators) {
  Field f = seeds.field();
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != seeds.cols()) throw ShapeMismatch("generator shape does not match vectors");
    f = join(f, g.field());
  }
  std::size_t n = seeds.cols();
  Matrix s = seeds.to_field(f);
  std::vector<Matrix> gens;
  for (const auto& g : generators) gens.push_back(g.to_field(f));
  Matrix out;
  std::visit(
      [&](const auto& sd) {
        using T = typename std::decay_t<decltype(sd)>::value_type;
        T zero = zero_of<T>(f);
        Echelon<T> ech{n, {}, {}};
        for (std::size_t i = 0; i < s.rows(); ++i) ech.add(get_row(sd, n, i));
        for (std::size_t next = 0; next < ech.rows.size() && ech.rows.size() < n; ++next)
          for (const auto& g : gens) {
            if (ech.rows.size() == n) break;
            ech.add(row_times(ech.rows[next], std::get<std::vector<T>>(g.storage()), n, zero));
          }
        Matrix m(ech.rows.size(), n, f);
        auto& d = std::get<std::vector<T>>(m.storage());
        for (std::size_t r = 0; r < ech.rows.size(); ++r)
          for (std::size_t j = 0; j < n; ++j) d[r * n + j] = ech.rows[r][j];
        out = m;
      },
      s.storage());
  return out;
}

bool is_invariant(const Matrix& basis, const std::vector<Matrix>& generators) {
  if (basis.rows() == 0) return true;
  std::size_t r = rank(basis);
  for (const auto& g : generators) {
    Matrix img = basis * g;
    if (rank(Matrix::vstack({basis, img})) != r) return false;
  }
  return true;
}

Matrix specialize_q(const Matrix& m, const Rational& c) {
  if (c.is_zero()) throw InvalidArgument("specialization at q = 0");
  if (m.field().kind == Field::Kind::Rational) return m;
  if (m.field().kind != Field::Kind::RatFunc) throw FieldMismatch("specialize_q expects a matrix over Q(q)");
  Matrix out(m.rows(), m.cols(), Field::rational());
  const auto& d = std::get<std::vector<RatFunc>>(m.storage());
  auto& o = std::get<std::vector<Rational>>(out.storage());
  for (std::size_t k = 0; k < d.size(); ++k) o[k] = d[k].eval(c);
  return out;
}

}  // namespace heckeforge::exact

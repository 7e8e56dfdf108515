#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "heckeforge/exact/scalar.hpp"

namespace heckeforge::exact {

// Dense matrix over a single field. Storage is typed per field so the
// arithmetic kernels never dispatch per entry.
class Matrix {
 public:
  using Storage = std::variant<std::vector<Rational>, std::vector<RatFunc>, std::vector<Cyclotomic>>;

  Matrix() : Matrix(0, 0, Field::rational()) {}
  Matrix(std::size_t rows, std::size_t cols, const Field& f);

  static Matrix identity(std::size_t n, const Field& f);
  static Matrix scalar(std::size_t n, const Scalar& s);
  static Matrix diagonal(const std::vector<Scalar>& d);
  // Field is the join of the entry fields, or `f` when given.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, const Field& f);
  static Matrix row_vector(const std::vector<Scalar>& v, const Field& f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Field& field() const { return field_; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& s);

  Matrix to_field(const Field& f) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix& operator+=(const Matrix& b) { return *this = *this + b; }
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix transpose() const;
  Matrix conj() const;
  Matrix conj_transpose() const;
  Matrix pow(long e) const;  // negative powers invert

  bool is_zero() const;
  bool is_identity() const;
  bool is_hermitian() const;

  Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix row(std::size_t i) const { return submatrix(i, 0, 1, cols_); }
  static Matrix vstack(const std::vector<Matrix>& parts);
  static Matrix kron(const Matrix& a, const Matrix& b);

  std::vector<std::vector<std::string>> to_strings() const;
  std::string to_string() const;

  const Storage& storage() const { return data_; }
  Storage& storage() { return data_; }

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  Storage data_;
};

// Reduced row echelon form; pivot columns returned in order.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);

// Basis of {v : m v = 0}, returned as the rows of a (nullity x cols) matrix.
Matrix kernel(const Matrix& m);
// Basis of {v : v m = 0}, as rows.
Matrix left_kernel(const Matrix& m);

Matrix inverse(const Matrix& m);
Scalar det(const Matrix& m);

// Coefficients c_0..c_n (low degree first) of det(x I - m), computed through
// Hessenberg reduction.
std::vector<Scalar> charpoly(const Matrix& m);

struct Signature {
  std::size_t n_plus = 0, n_minus = 0, n_zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};
// Inertia of a Hermitian matrix. Throws NotHermitian, and UnsupportedField
// when the characteristic polynomial is not rational.
Signature signature(const Matrix& h);

// Constraint X*a = b*X on an unknown p x q matrix X (a is q x q, b is p x p).
struct LinearConstraint {
  Matrix a, b;
};
// Basis of the solution space of all constraints.
std::vector<Matrix> solve_linear_subspace(const std::vector<LinearConstraint>& constraints);

// Smallest subspace containing the rows of `seeds` and closed under
// v -> v * g for every generator; returned as semi-echelon rows.
Matrix span_closure(const Matrix& seeds, const std::vector<Matrix>& generators);
// Whether the row space of `basis` is closed under every generator.
bool is_invariant(const Matrix& basis, const std::vector<Matrix>& generators);

// Entrywise q = c on a RatFunc matrix; rational matrices pass through.
Matrix specialize_q(const Matrix& m, const Rational& c);

}  // namespace heckeforge::exact

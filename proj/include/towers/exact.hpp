#pragma once

// Exact linear algebra over Q. No floating point is used anywhere in the
// project: every multiplicity, rank and structure constant is exact.

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace towers {

using Integer = mpz_class;
using Rational = mpq_class;

/// n / d in lowest terms with a positive denominator.
inline Rational fraction(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Sparse vector: strictly increasing indices, no explicit zeros.
template <class T>
using SparseVector = std::vector<std::pair<int, T>>;

using SparseQ = SparseVector<Rational>;
using SparseZ = SparseVector<Integer>;

/// Returns x + a*y.
SparseQ sparse_axpy(const SparseQ& x, const Rational& a, const SparseQ& y);
SparseQ sparse_scale(const SparseQ& x, const Rational& a);
SparseQ sparse_unit(int index);
SparseQ sparse_from_map(const std::map<int, Rational>& m);
Rational sparse_coefficient(const SparseQ& x, int index);

using Vector = std::vector<Rational>;

SparseQ to_sparse(const Vector& v);
Vector to_dense(const SparseQ& v, int size);

/// Dense row-major matrix with exact rational entries.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);

  static Matrix identity(int n);
  static Matrix scalar(int n, const Rational& c);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Rational& c) const;
  Vector apply(const Vector& v) const;
  Matrix transposed() const;
  Rational trace() const;
  bool is_zero() const;
  bool operator==(const Matrix& rhs) const = default;

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Kronecker product a (x) b, row-major in the pair index.
Matrix kron(const Matrix& a, const Matrix& b);

/// Incrementally built row space, stored fraction-free: every row is a
/// primitive integer vector with a positive leading entry at its pivot column.
/// Rows are not back-reduced; reduction scans columns left to right, which is
/// enough because a row never has entries left of its pivot.
class Echelon {
 public:
  explicit Echelon(int ncols);

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  /// Adds v to the row space. Returns true when v was independent.
  bool insert(const SparseQ& v);

  /// Remainder of v modulo the row space; it has no entries at pivot columns.
  SparseQ reduce(const SparseQ& v) const;
  bool contains(const SparseQ& v) const;

  std::vector<int> pivots() const;
  std::vector<int> free_columns() const;

  /// Basis of {x : r . x = 0 for every stored row r}, one vector per free
  /// column (that column set to 1, the other free columns 0).
  std::vector<Vector> nullspace() const;

 private:
  struct Reduced {
    SparseZ row;
    Rational factor;  // original vector == row * factor modulo the row space
  };
  Reduced reduce_integer(const SparseQ& v) const;

  int ncols_;
  std::map<int, SparseZ> rows_;
};

int rank(const Matrix& a);
/// Basis of {x : a x = 0}.
std::vector<Vector> nullspace(const Matrix& a);
/// Fraction-free (Bareiss) determinant.
Rational determinant(const Matrix& a);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace towers

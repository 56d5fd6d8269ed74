#include "towers/exact.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace towers {

namespace {

// a*x + b*y for integer sparse rows.
SparseZ combine(const Integer& a, const SparseZ& x, const Integer& b, const SparseZ& y) {
  SparseZ out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, b * y[j].second);
      ++j;
    } else {
      Integer v = a * x[i].second + b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

Integer content(const SparseZ& row) {
  Integer g = 0;
  for (const auto& [col, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

// Primitive integer row proportional to v; v == row * factor.
SparseZ primitive(const SparseQ& v, Rational& factor) {
  Integer l = 1;
  for (const auto& [col, q] : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  SparseZ row;
  row.reserve(v.size());
  for (const auto& [col, q] : v) {
    Integer z = q.get_num() * (l / q.get_den());
    row.emplace_back(col, std::move(z));
  }
  Integer g = content(row);
  if (g > 1) {
    for (auto& [col, z] : row) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
  } else if (g == 0) {
    g = 1;
  }
  factor = Rational(g, l);
  factor.canonicalize();
  return row;
}

}  // namespace

SparseQ sparse_axpy(const SparseQ& x, const Rational& a, const SparseQ& y) {
  SparseQ out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i]);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      Rational v = a * y[j].second;
      if (v != 0) out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      Rational v = x[i].second + a * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseQ sparse_scale(const SparseQ& x, const Rational& a) {
  if (a == 0) return {};
  SparseQ out = x;
  for (auto& [col, v] : out) v *= a;
  return out;
}

SparseQ sparse_unit(int index) { return SparseQ{{index, Rational(1)}}; }

SparseQ sparse_from_map(const std::map<int, Rational>& m) {
  SparseQ out;
  for (const auto& [k, v] : m)
    if (v != 0) out.emplace_back(k, v);
  return out;
}

Rational sparse_coefficient(const SparseQ& x, int index) {
  auto it = std::lower_bound(x.begin(), x.end(), index,
                             [](const auto& e, int i) { return e.first < i; });
  if (it != x.end() && it->first == index) return it->second;
  return 0;
}

SparseQ to_sparse(const Vector& v) {
  SparseQ out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != 0) out.emplace_back(i, v[i]);
  return out;
}

Vector to_dense(const SparseQ& v, int size) {
  Vector out(size);
  for (const auto& [i, q] : v) out.at(i) = q;
  return out;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

Matrix Matrix::identity(int n) { return scalar(n, 1); }

Matrix Matrix::scalar(int n, const Rational& c) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix out(rows_, rhs.cols_);
  Rational t;
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const Rational& b = rhs(k, j);
        if (sgn(b) == 0) continue;
        mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
        out(i, j) += t;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix out = *this;
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix out = *this;
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix out = *this;
  for (auto& v : out.data_) v *= c;
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix apply: shape mismatch");
  Vector out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Rational Matrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << '[';
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (sgn(b(k, l)) != 0) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

// ---------------------------------------------------------------- Echelon

Echelon::Echelon(int ncols) : ncols_(ncols) {}

Echelon::Reduced Echelon::reduce_integer(const SparseQ& v) const {
  Reduced r;
  r.row = primitive(v, r.factor);
  size_t pos = 0;
  while (pos < r.row.size()) {
    auto it = rows_.find(r.row[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    const SparseZ& pivot_row = it->second;
    Integer a = pivot_row.front().second;
    Integer b = r.row[pos].second;
    // row <- a*row - b*pivot_row; entries left of pos are untouched and the
    // entry at pos cancels, so scanning resumes at the same position.
    r.row = combine(a, r.row, -b, pivot_row);
    r.factor /= a;
    Integer g = content(r.row);
    if (g > 1) {
      for (auto& [col, z] : r.row) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
      r.factor *= g;
    }
  }
  return r;
}

bool Echelon::insert(const SparseQ& v) {
  if (v.empty()) return false;
  Reduced r = reduce_integer(v);
  if (r.row.empty()) return false;
  if (r.row.front().second < 0)
    for (auto& [col, z] : r.row) z = -z;
  int pivot = r.row.front().first;
  rows_.emplace(pivot, std::move(r.row));
  return true;
}

SparseQ Echelon::reduce(const SparseQ& v) const {
  if (v.empty()) return {};
  Reduced r = reduce_integer(v);
  SparseQ out;
  out.reserve(r.row.size());
  for (const auto& [col, z] : r.row) out.emplace_back(col, Rational(z) * r.factor);
  return out;
}

bool Echelon::contains(const SparseQ& v) const { return reduce_integer(v).row.empty(); }

std::vector<int> Echelon::pivots() const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

std::vector<int> Echelon::free_columns() const {
  std::vector<int> out;
  for (int c = 0; c < ncols_; ++c)
    if (!rows_.count(c)) out.push_back(c);
  return out;
}

std::vector<Vector> Echelon::nullspace() const {
  std::vector<Vector> basis;
  for (int f : free_columns()) {
    Vector x(ncols_);
    x[f] = 1;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      const SparseZ& row = it->second;
      Rational sum = 0;
      for (size_t k = 1; k < row.size(); ++k) {
        const Rational& xv = x[row[k].first];
        if (sgn(xv) != 0) sum += Rational(row[k].second) * xv;
      }
      x[it->first] = -sum / Rational(row.front().second);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

int rank(const Matrix& a) {
  Echelon e(a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    SparseQ row;
    for (int j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0) row.emplace_back(j, a(i, j));
    e.insert(row);
  }
  return e.rank();
}

std::vector<Vector> nullspace(const Matrix& a) {
  Echelon e(a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    SparseQ row;
    for (int j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0) row.emplace_back(j, a(i, j));
    e.insert(row);
  }
  return e.nullspace();
}

Rational determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  // Clear denominators row by row, then run Bareiss over Z.
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (int i = 0; i < n; ++i) {
    Integer l = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (int j = 0; j < n; ++j) m[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
    scale *= l;
  }
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  Rational det(m[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace towers

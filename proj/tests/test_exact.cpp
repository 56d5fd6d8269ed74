#include "doctest.h"
#include "towers/exact.hpp"

using namespace towers;

namespace {

Matrix from_rows(const std::vector<std::vector<long>>& rows) {
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("fraction is canonical") {
    CHECK(fraction(1, -2).get_str() == "-1/2");
    CHECK(fraction(6, 4).get_str() == "3/2");
    CHECK(fraction(0, 5) == 0);
  }

  TEST_CASE("determinant") {
    CHECK(determinant(from_rows({{2, 1}, {1, 3}})) == 5);
    CHECK(determinant(from_rows({{1, 2}, {2, 4}})) == 0);
    // 3x3 Hilbert matrix.
    Matrix h(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) h(i, j) = fraction(1, i + j + 1);
    CHECK(determinant(h) == fraction(1, 2160));
    CHECK(determinant(Matrix::identity(0)) == 1);
  }

  TEST_CASE("rank and nullspace agree with the definition") {
    Matrix a = from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}});
    CHECK(rank(a) == 2);
    auto ns = nullspace(a);
    CHECK(ns.size() == 2);
    for (const Vector& v : ns) {
      Vector w = a.apply(v);
      for (const Rational& x : w) CHECK(x == 0);
    }
  }

  TEST_CASE("echelon membership") {
    Echelon e(3);
    CHECK(e.insert(SparseQ{{0, Rational(2)}, {1, Rational(4)}}));
    CHECK_FALSE(e.insert(SparseQ{{0, Rational(1)}, {1, Rational(2)}}));
    CHECK(e.insert(SparseQ{{2, fraction(1, 3)}}));
    CHECK(e.rank() == 2);
    CHECK(e.contains(SparseQ{{0, Rational(-1)}, {1, Rational(-2)}, {2, Rational(5)}}));
    CHECK_FALSE(e.contains(SparseQ{{1, Rational(1)}}));
    CHECK(e.free_columns() == std::vector<int>{1});
  }

  TEST_CASE("kron and trace") {
    Matrix a = from_rows({{1, 2}, {3, 4}});
    Matrix b = from_rows({{0, 1}, {1, 0}});
    Matrix k = kron(a, b);
    CHECK(k.rows() == 4);
    CHECK(k(0, 1) == 1);
    CHECK(k(3, 2) == 4);
    CHECK(k.trace() == a.trace() * b.trace());
  }
}

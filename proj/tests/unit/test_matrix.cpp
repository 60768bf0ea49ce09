#include "troplab/matrix.hpp"

#include <doctest.h>

#include <random>

using troplab::Matrix;
using troplab::Rational;
using troplab::Vec;

namespace {

Matrix m(std::vector<std::vector<long long>> rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return Matrix(r);
}

}  // namespace

TEST_CASE("determinant and solve") {
  CHECK(m({{12, -3}, {-3, 6}}).det() == Rational(63));
  CHECK(m({{22, -7, 0}, {-7, 12, -3}, {0, -3, 6}}).det() == Rational(1092));
  CHECK(m({{1, 2}, {2, 4}}).det() == Rational(0));
  const auto a = m({{2, 1}, {1, 3}});
  const Vec b{Rational(3), Rational(5)};
  CHECK(a * a.solve(b) == b);
  CHECK(a.is_positive_definite());
  CHECK_FALSE(m({{1, 2}, {2, 1}}).is_positive_definite());
  CHECK(Matrix::lower_ones(3) * Matrix::identity(3) == Matrix::lower_ones(3));
}

TEST_CASE("hermite normal form spans the same lattice") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(static_cast<long long>(rng() % 11) - 5);
    if (a.det() == Rational(0)) continue;
    const Matrix h = troplab::hermite_normal_form(a);
    CHECK(h.det().abs() == a.det().abs());
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(h(i, i) > Rational(0));
      for (std::size_t j = i + 1; j < n; ++j) CHECK(h(i, j) == Rational(0));
      for (std::size_t j = 0; j < i; ++j) {
        CHECK(h(i, j) >= Rational(0));
        CHECK(h(i, j) < h(i, i));
      }
    }
    // Columns of each lie in the integer span of the other's.
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& x : a.solve(h.column(j))) CHECK(x.is_integer());
      for (const auto& x : h.solve(a.column(j))) CHECK(x.is_integer());
    }
  }
}

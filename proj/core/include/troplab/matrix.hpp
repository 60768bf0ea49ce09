#pragma once

// Small dense exact matrices for the period lattices.

#include "troplab/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace troplab {

using Vec = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Row-major nested initializer; rows must have equal length.
  explicit Matrix(std::vector<std::vector<Rational>> rows);

  static Matrix identity(std::size_t n);
  /// L_{ij} = 1 for j <= i.
  static Matrix lower_ones(std::size_t n);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  Vec column(std::size_t j) const;

  Matrix transpose() const;
  bool is_symmetric() const;
  bool is_integral() const;

  Rational det() const;
  /// Throws DomainError for a singular or non-square matrix.
  Vec solve(const Vec& b) const;
  /// Sylvester's criterion on leading minors.
  bool is_positive_definite() const;

  std::string str() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& a, const Vec& v);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t r_ = 0;
  std::size_t c_ = 0;
  std::vector<Rational> a_;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);

/// Lower-triangular Hermite normal form H of the lattice spanned by the
/// columns of an integral non-singular M: M U = H for unimodular U, with
/// H_ii > 0 and 0 <= H_ij < H_ii for j < i.
Matrix hermite_normal_form(const Matrix& m);

}  // namespace troplab

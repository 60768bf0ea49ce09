#include "troplab/matrix.hpp"

#include "troplab/errors.hpp"

#include <sstream>
#include <utility>

namespace troplab {

Matrix::Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

Matrix::Matrix(std::vector<std::vector<Rational>> rows) : r_(rows.size()), c_(rows.empty() ? 0 : rows[0].size()) {
  a_.reserve(r_ * c_);
  for (auto& row : rows) {
    if (row.size() != c_) throw DomainError("ragged matrix rows");
    for (auto& v : row) a_.push_back(std::move(v));
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Matrix Matrix::lower_ones(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = Rational(1);
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_symmetric() const { return r_ == c_ && *this == transpose(); }

bool Matrix::is_integral() const {
  for (const auto& v : a_)
    if (!v.is_integer()) return false;
  return true;
}

Rational Matrix::det() const {
  if (r_ != c_) throw DomainError("det of a non-square matrix");
  Matrix m = *this;
  Rational d(1);
  for (std::size_t c = 0; c < r_; ++c) {
    std::size_t piv = c;
    while (piv < r_ && m(piv, c) == Rational(0)) ++piv;
    if (piv == r_) return Rational(0);
    if (piv != c) {
      for (std::size_t j = 0; j < c_; ++j) std::swap(m(piv, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t r = c + 1; r < r_; ++r) {
      if (m(r, c) == Rational(0)) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < c_; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

Vec Matrix::solve(const Vec& b) const {
  if (r_ != c_ || b.size() != r_) throw DomainError("solve needs a square system");
  const std::size_t n = r_;
  Matrix m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (*this)(i, j);
    m(i, n) = b[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == Rational(0)) ++piv;
    if (piv == n) throw DomainError("singular matrix");
    if (piv != c)
      for (std::size_t j = 0; j <= n; ++j) std::swap(m(piv, j), m(c, j));
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c) == Rational(0)) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j <= n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m(i, n) / m(i, i);
  return x;
}

bool Matrix::is_positive_definite() const {
  if (!is_symmetric()) return false;
  for (std::size_t k = 1; k <= r_; ++k) {
    Matrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = (*this)(i, j);
    if (!(minor.det() > Rational(0))) return false;
  }
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < r_; ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < c_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.c_ != b.r_) throw DomainError("matrix shapes do not match");
  Matrix m(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      if (a(i, k) == Rational(0)) continue;
      for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.c_ != v.size()) throw DomainError("matrix and vector shapes do not match");
  Vec out(a.r_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t j = 0; j < a.c_; ++j) out[i] += a(i, j) * v[j];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw DomainError("matrix shapes do not match");
  Matrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
  return m;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DomainError("vector sizes do not match");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DomainError("vector sizes do not match");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator*(const Rational& s, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Matrix hermite_normal_form(const Matrix& m) {
  if (m.rows() != m.cols() || !m.is_integral()) throw DomainError("HNF needs a square integral matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<BigInt>> h(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = m(i, j).num();

  const auto col_axpy = [&](std::size_t dst, std::size_t src, const BigInt& f) {
    for (std::size_t r = 0; r < n; ++r) h[r][dst] -= f * h[r][src];
  };
  const auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < n; ++r) std::swap(h[r][a], h[r][b]);
  };

  for (std::size_t i = 0; i < n; ++i) {
    // Euclid across columns i..n-1 on row i.
    for (;;) {
      std::size_t piv = n;
      for (std::size_t j = i; j < n; ++j)
        if (h[i][j] != 0 && (piv == n || abs(h[i][j]) < abs(h[i][piv]))) piv = j;
      if (piv == n) throw DomainError("HNF of a singular matrix");
      if (piv != i) col_swap(i, piv);
      bool done = true;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (h[i][j] == 0) continue;
        col_axpy(j, i, h[i][j] / h[i][i]);  // truncating division keeps |remainder| < |pivot|
        if (h[i][j] != 0) done = false;
      }
      if (done) break;
    }
    if (h[i][i] < 0)
      for (std::size_t r = 0; r < n; ++r) h[r][i] = -h[r][i];
    for (std::size_t j = 0; j < i; ++j) {
      BigInt q = h[i][j] / h[i][i];
      if (h[i][j] - q * h[i][i] < 0) q -= 1;
      col_axpy(j, i, q);
    }
  }

  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = Rational(h[i][j]);
  return out;
}

}  // namespace troplab

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "minkhad/rng.hpp"
#include "minkhad/scalar.hpp"

namespace minkhad {

/// Dense matrix over the working field, row-major.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, FieldSpec field)
      : rows_(rows), cols_(cols), field_(field), a_(rows * cols, Scalar::zero(field)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
  }

  static Matrix ones(std::size_t rows, std::size_t cols, FieldSpec field) {
    Matrix m(rows, cols, field);
    for (auto& e : m.a_) e = Scalar::one(field);
    return m;
  }

  static Matrix identity(std::size_t n, FieldSpec field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldSpec field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<Scalar>& entries() const { return a_; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) += at(i, k) * o.at(k, j);
      }
    return r;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += at(i, j).str();
      }
      if (i + 1 < rows_) s += ";";
    }
    return s;
  }

 private:
  std::size_t rows_, cols_;
  FieldSpec field_;
  std::vector<Scalar> a_;
};

/// Entrywise product.
inline Matrix hadamard(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("hadamard: shape mismatch");
  Matrix r(a.rows(), a.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) * b.at(i, j);
  return r;
}

/// Entrywise reciprocal; any zero entry is an error.
inline Matrix hadamard_inverse(const Matrix& a) {
  Matrix r(a.rows(), a.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero())
        throw std::domain_error("hadamard_inverse: zero entry");
      r.at(i, j) = a.at(i, j).inverse();
    }
  return r;
}

/// Field rank via exact Gaussian elimination.
inline std::size_t rank(Matrix m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    Scalar inv = m.at(r, col).inverse();
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

/// Gauss-Jordan inverse; throws std::domain_error on singular input.
inline Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: square matrix required");
  std::size_t n = a.rows();
  Matrix m = a;
  Matrix inv = Matrix::identity(n, a.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("inverse: singular matrix");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Scalar d = m.at(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m.at(col, j) *= d;
      inv.at(col, j) *= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m.at(i, j) -= f * m.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

inline Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t h = 0; h < b.rows(); ++h)
        for (std::size_t k = 0; k < b.cols(); ++k)
          r.at(i * b.rows() + h, j * b.cols() + k) = a.at(i, j) * b.at(h, k);
  return r;
}

/// The Hadamard product sits inside the Kronecker product on the index sets
/// I = {1, m+2, 2m+3, ..., m^2} and J = {1, n+2, 2n+3, ..., n^2}.
inline bool kronecker_restriction_check(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("kronecker_restriction_check: shape mismatch");
  Matrix k = kronecker(a, b);
  Matrix h = hadamard(a, b);
  std::size_t m = a.rows(), n = a.cols();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (k.at(i * (m + 1), j * (n + 1)) != h.at(i, j)) return false;
  return true;
}

/// Seeded random matrix with integer entries in [lo, hi] (rationals) or
/// uniform residues (prime field, zero allowed unless nonzero is set).
inline Matrix random_matrix(std::size_t rows, std::size_t cols, FieldSpec field, Rng& rng,
                            bool nonzero = false, std::int64_t lo = -99, std::int64_t hi = 99) {
  Matrix m(rows, cols, field);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Scalar s = Scalar::zero(field);
      do {
        if (field.rational())
          s = Scalar::of(rng.in_range(lo, hi), field);
        else
          s = Scalar::fp(static_cast<std::int64_t>(rng.below(field.p)), field.p);
      } while (nonzero && s.is_zero());
      m.at(i, j) = s;
    }
  return m;
}

}  // namespace minkhad

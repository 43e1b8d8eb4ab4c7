#include "psw/dense.hpp"

#include <stdexcept>
#include <utility>

namespace psw {

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged dense literal");
    for (long v : r) data_.emplace_back(v);
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::unit(std::size_t n, std::size_t a, std::size_t b) {
  DenseMatrix m(n, n);
  m(a, b) = 1;
  return m;
}

Scalar DenseMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: not square");
  std::vector<Scalar> a = data_;
  const std::size_t n = rows_;
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a[p * n + c])) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a[i * n + c])) continue;
      Scalar f = a[i * n + c] / a[c * n + c];
      for (std::size_t j = c; j < n; ++j) a[i * n + j] -= f * a[c * n + j];
    }
  }
  return det;
}

DenseMatrix DenseMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
  const std::size_t n = rows_;
  DenseMatrix a = *this, inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(p, j), a(c, j));
      std::swap(inv(p, j), inv(c, j));
    }
    Scalar piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(a(i, c))) continue;
      Scalar f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

SparseMatrix DenseMatrix::to_sparse() const {
  SparseMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    RationalVec row;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!is_zero((*this)(i, j))) row.push(Index(j), (*this)(i, j));
    m.set_row(i, std::move(row));
  }
  return m;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("DenseMatrix product: mismatch");
  DenseMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("DenseMatrix sum: mismatch");
  DenseMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("DenseMatrix difference: mismatch");
  DenseMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

}  // namespace psw

#ifndef PSW_DENSE_HPP
#define PSW_DENSE_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "psw/scalar.hpp"
#include "psw/sparse.hpp"

namespace psw {

// Small dense exact matrix: group elements and Lie generators on V-bar.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  DenseMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static DenseMatrix identity(std::size_t n);
  // Matrix unit E_{ab}, 0-based.
  static DenseMatrix unit(std::size_t n, std::size_t a, std::size_t b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Scalar determinant() const;
  bool invertible() const { return !is_zero(determinant()); }
  DenseMatrix inverse() const;  // throws std::domain_error if singular

  SparseMatrix to_sparse() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace psw

#endif  // PSW_DENSE_HPP

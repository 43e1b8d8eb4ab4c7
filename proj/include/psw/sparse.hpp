#ifndef PSW_SPARSE_HPP
#define PSW_SPARSE_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "psw/scalar.hpp"

namespace psw {

using Index = std::uint32_t;

// Sparse coordinate vector: entries sorted by strictly increasing index,
// no stored zeros.
template <typename T>
struct SparseVec {
  struct Entry {
    Index index;
    T value;
  };
  std::vector<Entry> entries;

  bool empty() const { return entries.empty(); }
  std::size_t nnz() const { return entries.size(); }
  Index lead() const { return entries.front().index; }
  const T& lead_value() const { return entries.front().value; }

  // Returns nullptr when the coordinate is zero.
  const T* find(Index i) const;

  // Appends an entry; caller keeps indices increasing.
  void push(Index i, T v) { entries.push_back({i, std::move(v)}); }

  friend bool operator==(const SparseVec& a, const SparseVec& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t k = 0; k < a.entries.size(); ++k)
      if (a.entries[k].index != b.entries[k].index ||
          a.entries[k].value != b.entries[k].value)
        return false;
    return true;
  }
};

using RationalVec = SparseVec<Scalar>;
using IntegerVec = SparseVec<Integer>;

template <typename T>
const T* SparseVec<T>::find(Index i) const {
  std::size_t lo = 0, hi = entries.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (entries[mid].index < i)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < entries.size() && entries[lo].index == i) return &entries[lo].value;
  return nullptr;
}

// Builds a sparse vector from unsorted (index, value) pairs, summing
// duplicates and dropping zeros.
RationalVec make_sparse(std::vector<std::pair<Index, Scalar>> pairs);

// a*x + b*y
RationalVec axpby(const Scalar& a, const RationalVec& x, const Scalar& b,
                  const RationalVec& y);
IntegerVec axpby(const Integer& a, const IntegerVec& x, const Integer& b,
                 const IntegerVec& y);

// Scale to integers and divide by the content; leading coefficient > 0.
IntegerVec to_primitive(const RationalVec& v);
void make_primitive(IntegerVec& v);
RationalVec to_rational(const IntegerVec& v);

// Sparse exact matrix, row-major. Rows are SparseVec with column indices.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix identity(std::size_t d);
  static SparseMatrix zero(std::size_t rows, std::size_t cols) {
    return SparseMatrix(rows, cols);
  }
  // Dense row-major literal, mostly for tests.
  static SparseMatrix from_dense(
      std::initializer_list<std::initializer_list<long>> rows);
  static SparseMatrix from_rows(std::size_t cols, std::vector<RationalVec> rows);

  std::size_t rows() const { return row_data_.size(); }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows() == cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  const RationalVec& row(std::size_t i) const { return row_data_[i]; }
  const std::vector<RationalVec>& row_data() const { return row_data_; }
  Scalar at(std::size_t i, std::size_t j) const;

  // Replaces row i. Entries must be sorted, nonzero, within bounds.
  void set_row(std::size_t i, RationalVec v);

  SparseMatrix transpose() const;

  // Row-major flattening to a rows*cols coordinate vector, and back.
  RationalVec flatten() const;
  static SparseMatrix unflatten(const RationalVec& v, std::size_t rows,
                                std::size_t cols);

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(const Scalar& s, const SparseMatrix& a);

  // Matrix-vector product on a sparse coordinate vector.
  RationalVec apply(const RationalVec& x) const;

  // First nonzero entry as "(i,j)=v", or "" for the zero matrix.
  std::string first_nonzero() const;

 private:
  std::size_t cols_ = 0;
  std::vector<RationalVec> row_data_;
};

using OperatorMatrix = SparseMatrix;

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace psw

#endif  // PSW_SPARSE_HPP

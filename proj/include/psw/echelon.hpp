#ifndef PSW_ECHELON_HPP
#define PSW_ECHELON_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "psw/sparse.hpp"

namespace psw {

/*
 * Incremental fraction-free row echelon form over the integers.
 *
 * Rows are kept primitive (content 1, positive leading coefficient) and
 * are keyed by their leading column. Inserting a vector eliminates its
 * leading entry against stored rows until the leading column is new or
 * the vector vanishes. rref_rows() back-substitutes and normalises to the
 * unique reduced row echelon form over Q.
 */
class Echelon {
 public:
  explicit Echelon(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  // Leading-entry reduction; the result is zero iff v lies in the span.
  IntegerVec reduce(IntegerVec v) const;

  // Returns the stored (reduced, primitive) row when v is independent of
  // the current rows, or an empty vector when it is dependent.
  IntegerVec insert(IntegerVec v);

  bool has_pivot(Index col) const { return pivot_row_[col] >= 0; }

  // Canonical RREF rows sorted by pivot column, pivots equal to 1.
  std::vector<RationalVec> rref_rows() const;

 private:
  std::size_t dim_;
  std::vector<IntegerVec> rows_;
  std::vector<std::int32_t> pivot_row_;
};

}  // namespace psw

#endif  // PSW_ECHELON_HPP

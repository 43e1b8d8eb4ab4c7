#ifndef PSW_SUBSPACE_HPP
#define PSW_SUBSPACE_HPP

#include <cstddef>
#include <vector>

#include "psw/sparse.hpp"

namespace psw {

// Linear subspace of Q^ambient held by its canonical RREF basis. Two
// subspaces of the same ambient space are equal iff their bases are
// identical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  static Subspace full(std::size_t ambient_dim);
  // Canonicalises an arbitrary spanning list.
  static Subspace span(std::size_t ambient_dim,
                       const std::vector<RationalVec>& vectors);
  // Trusts that rows already form a canonical RREF basis.
  static Subspace from_rref(std::size_t ambient_dim,
                            std::vector<RationalVec> rows);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RationalVec>& basis() const { return basis_; }

  bool contains(const RationalVec& v) const;
  bool contains(const Subspace& other) const;

  // Coordinates of v in this basis (v must be contained).
  std::vector<Scalar> coordinates(const RationalVec& v) const;

  // True iff the RREF invariants hold (pivot 1, pivot columns strictly
  // increasing and cleared elsewhere).
  bool is_canonical() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  std::vector<RationalVec> basis_;
};

// Unique RREF with zero rows removed.
SparseMatrix rref(const SparseMatrix& m);
std::size_t rank(const SparseMatrix& m);

// {x : m x = 0}
Subspace nullspace(const SparseMatrix& m);

// Nullspace of a system given by integer equation rows over num_vars
// unknowns. Propagates single-variable equations, splits the rest into
// independent blocks and eliminates each block separately.
Subspace solve_homogeneous(std::size_t num_vars,
                           std::vector<IntegerVec> equations);

// These throw std::invalid_argument on mismatched ambient dimension.
bool subspace_equal(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& outer, const Subspace& inner);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

}  // namespace psw

#endif  // PSW_SUBSPACE_HPP

#ifndef PSW_OPERATOR_ALGEBRA_HPP
#define PSW_OPERATOR_ALGEBRA_HPP

#include <cstddef>
#include <vector>

#include "psw/sparse.hpp"
#include "psw/subspace.hpp"

namespace psw {

// Operators on a d-dimensional space are identified with vectors in
// Q^(d*d) through row-major flattening.

// Linear conditions X A - A X = 0 in the d*d entries of X.
std::vector<IntegerVec> commutation_equations(const OperatorMatrix& a);

// All X with X A = A X for every generator. Generators must be d x d.
Subspace commutant(const std::vector<OperatorMatrix>& generators,
                   std::size_t d);

// Least subspace containing seed and the identity, closed under products.
Subspace algebra_closure(const std::vector<OperatorMatrix>& seed,
                         std::size_t d);

// Non-unital variant: span of all nonempty products of seed elements.
Subspace span_closure(const std::vector<OperatorMatrix>& seed, std::size_t d);

// Basis of an operator subspace as d x d matrices.
std::vector<OperatorMatrix> operator_basis(const Subspace& s, std::size_t d);

Subspace operator_span(const std::vector<OperatorMatrix>& ops, std::size_t d);

}  // namespace psw

#endif  // PSW_OPERATOR_ALGEBRA_HPP

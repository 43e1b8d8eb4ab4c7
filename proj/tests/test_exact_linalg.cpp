#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "psw/echelon.hpp"
#include "psw/operator_algebra.hpp"
#include "psw/subspace.hpp"

using namespace psw;

namespace {

RationalVec vec(std::initializer_list<long> xs) {
  std::vector<std::pair<Index, Scalar>> t;
  Index i = 0;
  for (long x : xs) t.emplace_back(i++, Scalar(x));
  return make_sparse(std::move(t));
}

Scalar q(long a, long b) {
  Scalar x(a, b);
  x.canonicalize();
  return x;
}

SparseMatrix random_sparse(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                           int density_pct) {
  std::vector<RationalVec> data;
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<std::pair<Index, Scalar>> t;
    for (std::size_t j = 0; j < cols; ++j)
      if (int(rng() % 100) < density_pct)
        t.emplace_back(Index(j), q(long(rng() % 11) - 5, long(rng() % 4) + 1));
    data.push_back(make_sparse(std::move(t)));
  }
  return SparseMatrix::from_rows(cols, std::move(data));
}

}  // namespace

TEST(ExactScalar, LowestTermsAndExactArithmetic) {
  Scalar a(6, -4);
  a.canonicalize();
  EXPECT_EQ(a.get_num(), -3);
  EXPECT_EQ(a.get_den(), 2);
  Scalar third(1, 3);
  EXPECT_EQ(third + third + third, Scalar(1));
  EXPECT_EQ(Scalar(2, 3) * Scalar(3, 4), Scalar(1, 2));
}

TEST(Rref, Identity) {
  auto id = SparseMatrix::identity(3);
  EXPECT_EQ(rref(id), id);
}

TEST(Rref, ZeroMatrixHasNoRows) {
  auto r = rref(SparseMatrix::zero(2, 4));
  EXPECT_EQ(r.rows(), 0u);
  EXPECT_EQ(r.cols(), 4u);
}

TEST(Rref, HandEliminated) {
  EXPECT_EQ(rref(SparseMatrix::from_dense({{2, 4}, {1, 2}})), SparseMatrix::from_dense({{1, 2}}));
}

TEST(Rref, MixedPivots) {
  auto m = SparseMatrix::from_dense({{0, 2, 4, 2}, {1, 1, 0, 3}, {1, 3, 4, 5}});
  EXPECT_EQ(rref(m), SparseMatrix::from_dense({{1, 0, -2, 2}, {0, 1, 2, 1}}));
}

TEST(Rref, IdempotentOnRandomMatrices) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 40; ++t) {
    auto m = random_sparse(rng, 1 + rng() % 7, 1 + rng() % 9, 35);
    auto r = rref(m);
    EXPECT_EQ(rref(r), r);
    EXPECT_EQ(r.rows(), oracle::rank(oracle::to_dense(m)));
    EXPECT_TRUE(Subspace::span(m.cols(), r.row_data()) == Subspace::span(m.cols(), m.row_data()));
  }
}

TEST(Nullspace, IdentityIsZero) {
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(nullspace(SparseMatrix::identity(n)).dim(), 0u);
}

TEST(Nullspace, ZeroIsFull) {
  auto s = nullspace(SparseMatrix::zero(3, 3));
  EXPECT_EQ(s.dim(), 3u);
  EXPECT_TRUE(s == Subspace::full(3));
}

TEST(Nullspace, SingleRow) {
  auto s = nullspace(SparseMatrix::from_dense({{1, 1}}));
  ASSERT_EQ(s.dim(), 1u);
  EXPECT_TRUE(s == Subspace::span(2, {vec({1, -1})}));
  EXPECT_TRUE(s.is_canonical());
}

TEST(Nullspace, RankNullityOnRandomMatrices) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 40; ++t) {
    auto m = random_sparse(rng, 1 + rng() % 8, 1 + rng() % 10, 30);
    auto ns = nullspace(m);
    EXPECT_EQ(rank(m) + ns.dim(), m.cols());
    EXPECT_TRUE(ns.is_canonical());
    for (const auto& v : ns.basis()) EXPECT_TRUE(m.apply(v).empty());
  }
}

TEST(SolveHomogeneous, MatchesNullspace) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    auto m = random_sparse(rng, 1 + rng() % 10, 1 + rng() % 12, 20);
    std::vector<IntegerVec> eqs;
    for (const auto& row : m.row_data())
      if (!row.empty()) eqs.push_back(to_primitive(row));
    EXPECT_TRUE(solve_homogeneous(m.cols(), eqs) == nullspace(m));
  }
}

TEST(SubspaceEqual, Scaling) {
  EXPECT_TRUE(subspace_equal(Subspace::span(2, {vec({1, 0})}), Subspace::span(2, {vec({2, 0})})));
}

TEST(SubspaceEqual, DifferentLines) {
  EXPECT_FALSE(subspace_equal(Subspace::span(2, {vec({1, 0})}), Subspace::span(2, {vec({0, 1})})));
}

TEST(SubspaceEqual, RowSpaceOfInvertible) {
  auto m = SparseMatrix::from_dense({{1, 1}, {0, 1}});
  EXPECT_EQ(oracle::rank(oracle::to_dense(m)), 2u);
  EXPECT_TRUE(subspace_equal(Subspace::span(2, m.row_data()), Subspace::full(2)));
}

TEST(SubspaceEqual, AmbientMismatchThrows) {
  EXPECT_THROW(subspace_equal(Subspace(2), Subspace(3)), std::invalid_argument);
  EXPECT_THROW(subspace_intersect(Subspace(2), Subspace(3)), std::invalid_argument);
  EXPECT_THROW(subspace_contains(Subspace(2), Subspace(3)), std::invalid_argument);
}

TEST(SubspaceIntersect, FullSpaceIsNeutral) {
  auto s = Subspace::span(4, {vec({1, 2, 0, 3}), vec({0, 1, 1, 0})});
  EXPECT_TRUE(subspace_intersect(Subspace::full(4), s) == s);
}

TEST(SubspaceIntersect, CoordinateLines) {
  EXPECT_EQ(subspace_intersect(Subspace::span(2, {vec({1, 0})}), Subspace::span(2, {vec({0, 1})})).dim(),
            0u);
}

TEST(SubspaceIntersect, StackedSystem) {
  auto a = Subspace::span(3, {vec({1, 1, 0}), vec({0, 0, 1})});
  auto b = Subspace::span(3, {vec({1, 1, 0}), vec({1, 0, 0})});
  EXPECT_TRUE(subspace_intersect(a, b) == Subspace::span(3, {vec({1, 1, 0})}));
}

TEST(SubspaceIntersect, CommutativeWithDimensionFormula) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 40; ++t) {
    std::size_t amb = 2 + rng() % 7;
    auto a = Subspace::span(amb, random_sparse(rng, rng() % 5, amb, 40).row_data());
    auto b = Subspace::span(amb, random_sparse(rng, rng() % 5, amb, 40).row_data());
    auto ab = subspace_intersect(a, b);
    EXPECT_TRUE(ab == subspace_intersect(b, a));
    EXPECT_EQ(a.dim() + b.dim(), ab.dim() + subspace_sum(a, b).dim());
    EXPECT_TRUE(a.contains(ab));
    EXPECT_TRUE(b.contains(ab));
  }
}

TEST(Subspace, CoordinatesReconstruct) {
  auto s = Subspace::span(4, {vec({1, 2, 0, 3}), vec({0, 1, 1, 0})});
  RationalVec v = axpby(Scalar(3), vec({1, 2, 0, 3}), Scalar(-2), vec({0, 1, 1, 0}));
  auto c = s.coordinates(v);
  RationalVec back;
  for (std::size_t i = 0; i < c.size(); ++i) back = axpby(Scalar(1), back, c[i], s.basis()[i]);
  EXPECT_EQ(back, v);
}

TEST(Echelon, InsertReportsDependence) {
  Echelon e(3);
  EXPECT_FALSE(e.insert(to_primitive(vec({2, 4, 0}))).empty());
  EXPECT_TRUE(e.insert(to_primitive(vec({1, 2, 0}))).empty());
  EXPECT_FALSE(e.insert(to_primitive(vec({0, 0, 5}))).empty());
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_TRUE(e.has_pivot(0));
  EXPECT_FALSE(e.has_pivot(1));
}

TEST(Commutant, EmptyGeneratorsGiveEverything) {
  EXPECT_EQ(commutant({}, 3).dim(), 9u);
}

TEST(Commutant, IdentityGivesEverything) {
  EXPECT_TRUE(commutant({SparseMatrix::identity(3)}, 3) == Subspace::full(9));
}

TEST(Commutant, GenericDiagonal) {
  auto a = SparseMatrix::from_dense({{1, 0}, {0, 2}});
  auto c = commutant({a}, 2);
  EXPECT_EQ(c.dim(), oracle::commutant_dim({oracle::to_dense(a)}, 2));
  EXPECT_TRUE(c == Subspace::span(4, {vec({1, 0, 0, 0}), vec({0, 0, 0, 1})}));
}

TEST(Commutant, AgreesWithDenseOracle) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 15; ++t) {
    std::size_t d = 2 + rng() % 4;
    std::vector<SparseMatrix> gens;
    std::vector<oracle::Dense> dense;
    for (std::size_t g = 0; g < 1 + rng() % 2; ++g) {
      gens.push_back(random_sparse(rng, d, d, 30));
      dense.push_back(oracle::to_dense(gens.back()));
    }
    auto c = commutant(gens, d);
    EXPECT_EQ(c.dim(), oracle::commutant_dim(dense, d));
    for (const auto& x : operator_basis(c, d))
      for (const auto& a : gens) EXPECT_TRUE(commutator(x, a).is_zero());
  }
}

TEST(Commutant, IsAUnitalAlgebra) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 10; ++t) {
    std::size_t d = 2 + rng() % 3;
    auto c = commutant({random_sparse(rng, d, d, 40)}, d);
    EXPECT_TRUE(algebra_closure(operator_basis(c, d), d) == c);
    EXPECT_TRUE(c.contains(SparseMatrix::identity(d).flatten()));
  }
}

TEST(Commutant, DoubleCommutantContainsClosure) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    std::size_t d = 2 + rng() % 3;
    std::vector<SparseMatrix> seed{random_sparse(rng, d, d, 40)};
    auto cc = commutant(operator_basis(commutant(seed, d), d), d);
    EXPECT_TRUE(subspace_contains(cc, algebra_closure(seed, d)));
  }
}

TEST(AlgebraClosure, Identity) {
  EXPECT_EQ(algebra_closure({SparseMatrix::identity(3)}, 3).dim(), 1u);
}

TEST(AlgebraClosure, Swap) {
  auto swap = SparseMatrix::from_dense({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
  auto s = algebra_closure({swap}, 4);
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(s == operator_span({SparseMatrix::identity(4), swap}, 4));
}

TEST(AlgebraClosure, GenericDiagonal) {
  auto a = SparseMatrix::from_dense({{1, 0}, {0, 2}});
  EXPECT_TRUE(algebra_closure({a}, 2) == commutant({a}, 2));
}

TEST(SpanClosure, NilpotentIsNonUnital) {
  auto n = SparseMatrix::from_dense({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  EXPECT_EQ(span_closure({n}, 3).dim(), 2u);
  EXPECT_EQ(algebra_closure({n}, 3).dim(), 3u);
}

TEST(SparseMatrix, FlattenRoundTripAndProducts) {
  auto a = SparseMatrix::from_dense({{1, 2}, {0, 3}});
  auto b = SparseMatrix::from_dense({{0, 1}, {1, 0}});
  EXPECT_EQ(SparseMatrix::unflatten(a.flatten(), 2, 2), a);
  EXPECT_EQ(oracle::to_dense(a * b), oracle::mul(oracle::to_dense(a), oracle::to_dense(b)));
  EXPECT_EQ(a.transpose().transpose(), a);
  EXPECT_EQ(kron(SparseMatrix::identity(2), SparseMatrix::identity(3)), SparseMatrix::identity(6));
  EXPECT_EQ(a.first_nonzero(), "(0,0)=1");
}

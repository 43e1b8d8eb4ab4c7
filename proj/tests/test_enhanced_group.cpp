#include <gtest/gtest.h>

#include <random>

#include "psw/enhanced_group.hpp"

using namespace psw;

namespace {

std::vector<Scalar> qv(std::initializer_list<long> xs) {
  std::vector<Scalar> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Scalar q(long a, long b) {
  Scalar x(a, b);
  x.canonicalize();
  return x;
}

ParabolicElement random_element(std::mt19937_64& rng, int n, bool unit_c = false) {
  for (;;) {
    DenseMatrix g{static_cast<std::size_t>(n), static_cast<std::size_t>(n)};
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        g(std::size_t(i), std::size_t(j)) = q(long(rng() % 9) - 4, long(rng() % 3) + 1);
    if (!g.invertible()) continue;
    std::vector<Scalar> v;
    for (int i = 0; i < n; ++i) v.push_back(q(long(rng() % 7) - 3, long(rng() % 2) + 1));
    Scalar c = unit_c ? Scalar(1) : q(long(rng() % 5) + 1, long(rng() % 3) + 1);
    return ParabolicElement(g, v, c);
  }
}

Tensor eta(int n, int letter) {
  SpaceDescriptor s(n, 1);
  return Tensor::basis_vector(s, MultiIndex{{letter}});
}

}  // namespace

TEST(EnhancedMul, TranslationsAdd) {
  auto a = ParabolicElement::translation(qv({1, 2}));
  auto b = ParabolicElement::translation(qv({3, -5}));
  EXPECT_EQ(enhanced_mul(a, b), ParabolicElement::translation(qv({4, -3})));
}

TEST(EnhancedMul, LeviActsOnTranslationPart) {
  DenseMatrix g{{1, 2}, {0, 3}};
  auto a = ParabolicElement::levi(g);
  auto b = ParabolicElement::translation(qv({1, 1}));
  EXPECT_EQ(enhanced_mul(a, b), ParabolicElement(g, qv({3, 3}), 1));
}

TEST(EnhancedMul, TorusConjugation) {
  const int n = 2;
  auto w = qv({1, -2});
  auto c = ParabolicElement::torus(n, 3);
  auto cinv = ParabolicElement::torus(n, Scalar(1, 3));
  auto ew = ParabolicElement::translation(w);
  EXPECT_EQ(enhanced_mul(c, ew), ParabolicElement(DenseMatrix::identity(2), w, 3));
  EXPECT_EQ(enhanced_mul(ew, c), ParabolicElement(DenseMatrix::identity(2), qv({3, -6}), 3));
  EXPECT_EQ(enhanced_mul(enhanced_mul(cinv, ew), c), ParabolicElement::translation(qv({3, -6})));
  EXPECT_EQ(enhanced_mul(enhanced_mul(c, ew), cinv),
            ParabolicElement::translation({Scalar(1, 3), Scalar(-2, 3)}));
}

TEST(EnhancedMul, MatrixHomomorphismAndAssociativity) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 30; ++t) {
    int n = 1 + int(rng() % 3);
    auto a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
    EXPECT_EQ(enhanced_mul(a, b).to_matrix(), a.to_matrix() * b.to_matrix());
    EXPECT_EQ(enhanced_mul(enhanced_mul(a, b), c), enhanced_mul(a, enhanced_mul(b, c)));
  }
}

TEST(EnhancedMul, EnhancedSubgroupLaw) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 20; ++t) {
    int n = 1 + int(rng() % 3);
    auto a = random_element(rng, n, true), b = random_element(rng, n, true);
    auto ab = enhanced_mul(a, b);
    EXPECT_EQ(ab.c(), 1);
    EXPECT_EQ(ab.g(), a.g() * b.g());
    for (int i = 0; i < n; ++i) {
      Scalar expect = a.v()[std::size_t(i)];
      for (int j = 0; j < n; ++j) expect += a.g()(std::size_t(i), std::size_t(j)) * b.v()[std::size_t(j)];
      EXPECT_EQ(ab.v()[std::size_t(i)], expect);
    }
  }
}

TEST(ParabolicElement, Validation) {
  EXPECT_THROW(ParabolicElement(DenseMatrix{{0}}, qv({1}), 1), std::invalid_argument);
  EXPECT_THROW(ParabolicElement(DenseMatrix{{1}}, qv({1}), 0), std::invalid_argument);
  EXPECT_THROW(ParabolicElement(DenseMatrix{{1}}, qv({1, 2}), 1), std::invalid_argument);
  EXPECT_THROW(ParabolicElement::from_matrix(DenseMatrix{{1, 0}, {1, 1}}), std::invalid_argument);
}

TEST(ActEnhanced, TranslationMovesEtaOnly) {
  auto ew = ParabolicElement::translation(qv({2, 5}));
  Tensor image = act_enhanced(ew, eta(2, 3));
  EXPECT_EQ(image.coefficient(MultiIndex{{1}}), 2);
  EXPECT_EQ(image.coefficient(MultiIndex{{2}}), 5);
  EXPECT_EQ(image.coefficient(MultiIndex{{3}}), 1);
  EXPECT_EQ(act_enhanced(ew, eta(2, 1)), eta(2, 1));
}

TEST(ActEnhanced, ModuleFormulaOnBasis) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    int n = 1 + int(rng() % 3);
    auto a = random_element(rng, n, true);
    SpaceDescriptor s(n, 1);
    for (int k = 1; k <= n + 1; ++k) {
      Tensor out = act_enhanced(a, eta(n, k));
      for (int i = 1; i <= n + 1; ++i) {
        Scalar expect;
        if (k <= n)
          expect = i <= n ? a.g()(std::size_t(i - 1), std::size_t(k - 1)) : Scalar(0);
        else
          expect = i <= n ? a.v()[std::size_t(i - 1)] : Scalar(1);
        EXPECT_EQ(out.coefficient(MultiIndex{{i}}), expect);
      }
    }
  }
}

TEST(GroupGenerators, ParabolicCounts) {
  auto g1 = group_generators_parabolic(SpaceDescriptor(1, 1));
  ASSERT_EQ(g1.size(), 3u);
  EXPECT_EQ(g1[0], ParabolicElement::translation(qv({1})));
  EXPECT_EQ(group_generators_parabolic(SpaceDescriptor(2, 1)).size(), 6u);
  for (int n = 1; n <= 3; ++n)
    for (const auto& e : group_generators_parabolic(SpaceDescriptor(n, 1)))
      EXPECT_TRUE(e.to_matrix().invertible());
}

TEST(GroupGenerators, KindsAreInvertibleAndShaped) {
  for (auto kind : {GroupKind::full, GroupKind::levi, GroupKind::parabolic, GroupKind::unipotent}) {
    EXPECT_EQ(group_kind_from_string(to_string(kind)), kind);
    for (const auto& g : group_generators(SpaceDescriptor(2, 1), kind)) {
      EXPECT_TRUE(g.invertible());
      if (kind != GroupKind::full) EXPECT_NO_THROW(ParabolicElement::from_matrix(g));
    }
  }
  EXPECT_THROW(group_kind_from_string("borel"), std::invalid_argument);
}

TEST(LieGenerators, Sizes) {
  for (int n = 1; n <= 3; ++n) {
    SpaceDescriptor s(n, 1);
    std::size_t nn = std::size_t(n);
    EXPECT_EQ(lie_generators(s, GroupKind::levi).size(), nn * nn + 1);
    EXPECT_EQ(lie_generators(s, GroupKind::unipotent).size(), nn);
    EXPECT_EQ(lie_generators(s, GroupKind::parabolic).size(), nn * nn + 1 + nn);
    EXPECT_EQ(lie_generators(s, GroupKind::full).size(), (nn + 1) * (nn + 1));
  }
}

#include <gtest/gtest.h>

#include <set>

#include "fibraid/fusion_basis.hpp"

using namespace fibraid;

namespace {

// Independent count: paths of partial charges, by brute force over all label strings.
std::size_t brute_force_dim(int n) {
  if (n == 1) return 1;
  std::size_t count = 0;
  const int labels = n - 1;
  for (unsigned mask = 0; mask < (1u << labels); ++mask) {
    int prev = 1;  // charge of anyon 1
    bool ok = true;
    for (int k = 0; k < labels && ok; ++k) {
      const int cur = (mask >> k) & 1;
      ok = fusion_allowed(qspin(prev), QSpin::One, qspin(cur));
      prev = cur;
    }
    count += ok ? 1 : 0;
  }
  return count;
}

}  // namespace

TEST(FusionBasis, DimensionsFollowFibonacciRecurrence) {
  std::uint64_t a = 1, b = 1;  // Fib(1), Fib(2)
  for (int n = 1; n <= 16; ++n) {
    EXPECT_EQ(FusionBasis::enumerate(n).dim(), b) << "n=" << n;
    EXPECT_EQ(FusionBasis::enumerate(n).dim(), brute_force_dim(n)) << "n=" << n;
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
}

TEST(FusionBasis, ThreeAnyonOrdering) {
  const auto b = FusionBasis::enumerate(3);
  ASSERT_EQ(b.dim(), 3u);
  EXPECT_EQ(b.paths()[0].to_string(), "((•,•)_0,•)_1");
  EXPECT_EQ(b.paths()[1].to_string(), "((•,•)_1,•)_1");
  EXPECT_EQ(b.paths()[2].to_string(), "((•,•)_1,•)_0");
  EXPECT_EQ(b.block(QSpin::One).size(), 2u);
  EXPECT_EQ(b.block(QSpin::Zero).size(), 1u);
}

TEST(FusionBasis, SixAnyonBlocks) {
  const auto b = FusionBasis::enumerate(6);
  EXPECT_EQ(b.dim(), 13u);
  EXPECT_EQ(b.block(QSpin::Zero).size(), 5u);
  EXPECT_EQ(b.block(QSpin::One).size(), 8u);
}

TEST(FusionBasis, PathsAreDistinctAndIndexed) {
  for (int n = 2; n <= 10; ++n) {
    const auto b = FusionBasis::enumerate(n);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < b.dim(); ++i) {
      EXPECT_TRUE(seen.insert(b.paths()[i].to_string()).second);
      EXPECT_EQ(b.index_of(b.paths()[i]), i);
      EXPECT_TRUE(b.block(b.paths()[i].total()).contains(i));
    }
  }
}

TEST(FusionBasis, SingleAnyonAndBadInput) {
  EXPECT_EQ(FusionBasis::enumerate(1).dim(), 1u);
  EXPECT_THROW(FusionBasis::enumerate(0), std::invalid_argument);
}

TEST(QubitEmbedding, TwoQubitChangeOfBasisIsUnitaryAndBlockwise) {
  const auto e = computational_embedding(QubitLayout::two_qubits());
  const Matrix& s = e.to_layout_basis;
  EXPECT_LT((s * s.adjoint() - Matrix::Identity(13, 13)).norm(), 1e-13);
  ASSERT_EQ(e.blocks.size(), 2u);
  for (const auto& comp : e.computational) EXPECT_EQ(comp.size(), 4u);
  EXPECT_EQ(e.computational_count(), 8u);
  EXPECT_EQ(e.noncomputational.size(), 5u);
  // No amplitude crosses total-charge blocks.
  const auto chain = FusionBasis::enumerate(6);
  for (Eigen::Index r = 0; r < 13; ++r)
    for (Eigen::Index c = 0; c < 13; ++c)
      if (std::abs(s(r, c)) > 1e-14) {
        const auto& blk_r = e.blocks[0].contains(static_cast<std::size_t>(r)) ? e.blocks[0] : e.blocks[1];
        EXPECT_EQ(blk_r.charge, chain.paths()[static_cast<std::size_t>(c)].total());
      }
}

TEST(QubitEmbedding, SingleQubitIsChainBasis) {
  const auto e = computational_embedding(QubitLayout::single_qubit());
  EXPECT_LT((e.to_layout_basis - Matrix::Identity(3, 3)).norm(), 1e-15);
  EXPECT_EQ(e.computational_count(), 2u);
}

TEST(QubitEmbedding, RejectsOtherLayouts) {
  EXPECT_THROW(computational_embedding(QubitLayout{6, {{1, 2, 3}}}), std::invalid_argument);
  EXPECT_THROW(computational_embedding(QubitLayout{6, {{2, 3, 4}, {4, 5, 6}}}), std::invalid_argument);
}

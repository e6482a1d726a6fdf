#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fibraid/braid_word.hpp"
#include "fibraid/metrics.hpp"
#include "fibraid/representation.hpp"

using namespace fibraid;

namespace {

const double kPi = std::numbers::pi;

// Three-anyon generators written out by hand from tau and the two exchange phases.
Matrix hand_sigma1() {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = std::polar(1.0, -4 * kPi / 5);
  m(1, 1) = std::polar(1.0, 3 * kPi / 5);
  m(2, 2) = std::polar(1.0, 3 * kPi / 5);
  return m;
}

Matrix hand_sigma2() {
  const double t = (std::sqrt(5.0) - 1) / 2;
  const double s = std::sqrt(t);
  const Complex r0 = std::polar(1.0, -4 * kPi / 5), r1 = std::polar(1.0, 3 * kPi / 5);
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = t * t * r0 + t * r1;
  m(0, 1) = t * s * r0 - t * s * r1;
  m(1, 0) = m(0, 1);
  m(1, 1) = t * r0 + t * t * r1;
  m(2, 2) = r1;
  return m;
}

}  // namespace

TEST(Representation, ThreeAnyonGeneratorsMatchHandComputation) {
  const auto& rep = representation(3);
  EXPECT_LT(distance(rep.generator(1).entries, hand_sigma1()), 1e-14);
  EXPECT_LT(distance(rep.generator(2).entries, hand_sigma2()), 1e-14);
}

TEST(Representation, Sigma2CornerHasModulusTau) {
  const double t = (std::sqrt(5.0) - 1) / 2;
  EXPECT_NEAR(std::abs(representation(3).generator(2).entries(0, 0)), t, 1e-12);
  EXPECT_NEAR(std::abs(hand_sigma2()(0, 0)), t, 1e-15);
}

class GeneratorAlgebra : public ::testing::TestWithParam<int> {};

TEST_P(GeneratorAlgebra, BraidGroupRelationsHold) {
  const int n = GetParam();
  const auto& rep = representation(n);
  const Matrix id = rep.identity();
  for (int i = 1; i < n; ++i) {
    const auto& g = rep.generator(i);
    EXPECT_LT(g.unitarity_defect(), 1e-12) << "i=" << i;
    EXPECT_LT(g.off_block_magnitude(), 1e-12) << "i=" << i;
    Matrix p = id;
    for (int k = 0; k < 10; ++k) p = g.entries * p;
    EXPECT_LT(distance(p, id), 1e-12) << "sigma^10, i=" << i;
    EXPECT_LT(distance(rep.power(i, 7), rep.power(i, -3)), 1e-12);
    if (i + 1 < n) {
      const Matrix& a = g.entries;
      const Matrix& b = rep.generator(i + 1).entries;
      EXPECT_LT(distance(a * b * a, b * a * b), 1e-12) << "Yang-Baxter, i=" << i;
    }
    for (int j = i + 2; j < n; ++j) {
      const Matrix& a = g.entries;
      const Matrix& b = rep.generator(j).entries;
      EXPECT_LT(distance(a * b, b * a), 1e-12) << "far commutation " << i << "," << j;
    }
  }
}

TEST_P(GeneratorAlgebra, FullTwistIsScalarOnEachBlock) {
  // (s1 ... s_{n-1})^n is central, so it is a phase on every total-charge block.
  const int n = GetParam();
  BraidWord w{n, {}};
  for (int r = 0; r < n; ++r)
    for (int i = 1; i < n; ++i) w.crossings.push_back({i, 1});
  const BlockUnitary u = evaluate(w, n);
  for (const auto& blk : u.blocks) {
    const Matrix b = u.block_matrix(blk);
    const Complex z = b(0, 0);
    EXPECT_LT((b - z * Matrix::Identity(b.rows(), b.cols())).norm(), 1e-11);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallChains, GeneratorAlgebra, ::testing::Values(3, 4, 5, 6, 7));

TEST(Representation, RejectsOutOfRangeGenerator) {
  EXPECT_THROW(generator(3, 0), std::invalid_argument);
  EXPECT_THROW(generator(3, 3), std::invalid_argument);
}

TEST(Representation, SixAnyonBlocksAreFiveAndEight) {
  const auto& g = representation(6).generator(3);
  ASSERT_EQ(g.blocks.size(), 2u);
  std::size_t sizes[2] = {0, 0};
  for (const auto& b : g.blocks) sizes[to_int(b.charge)] = b.size();
  EXPECT_EQ(sizes[0], 5u);
  EXPECT_EQ(sizes[1], 8u);
}

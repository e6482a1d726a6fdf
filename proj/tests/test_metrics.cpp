#include <gtest/gtest.h>

#include <random>

#include "fibraid/metrics.hpp"

using namespace fibraid;

namespace {

Matrix random_unitary(std::mt19937& rng, int d) {
  std::normal_distribution<double> g;
  Matrix a(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) a(r, c) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Matrix> qr(a);
  return qr.householderQ();
}

}  // namespace

TEST(Metrics, DistanceIsLargestSingularValue) {
  Matrix a = Matrix::Zero(2, 2), b = Matrix::Zero(2, 2);
  a(0, 0) = 3.0;
  a(1, 1) = Complex(0, -4.0);
  EXPECT_NEAR(distance(a, b), 4.0, 1e-14);
  EXPECT_THROW(distance(Matrix::Zero(2, 2), Matrix::Zero(3, 3)), std::invalid_argument);
}

TEST(Metrics, PhaseDistanceClosedFormMatchesScan) {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    const int d = 2 + t % 4;
    const Matrix u = random_unitary(rng, d);
    // Half the cases: v close to a phased u.
    Matrix v = random_unitary(rng, d);
    if (t % 2 == 0) {
      const Matrix h = 0.05 * random_unitary(rng, d);
      v = (std::polar(1.0, 0.7 * t) * u + h).householderQr().householderQ();
    }
    const auto exact = phase_distance(u, v);
    const auto scan = phase_distance_numeric(u, v);
    EXPECT_NEAR(exact.epsilon, scan.epsilon, 1e-10);
    EXPECT_NEAR(distance(u, std::polar(1.0, exact.phase) * v), exact.epsilon, 1e-12);
  }
}

TEST(Metrics, PhaseDistanceIgnoresGlobalPhase) {
  std::mt19937 rng(3);
  const Matrix u = random_unitary(rng, 3);
  EXPECT_LT(phase_distance(u, std::polar(1.0, 2.1) * u).epsilon, 1e-12);
  EXPECT_GT(distance(u, std::polar(1.0, 2.1) * u), 1.0);
}

TEST(Metrics, TwoByTwoFormAgreesAndKeepsTinyDistances) {
  std::mt19937 rng(8);
  for (int t = 0; t < 50; ++t) {
    const Matrix2 u = random_unitary(rng, 2);
    const Matrix2 v = random_unitary(rng, 2);
    EXPECT_NEAR(phase_distance_2x2(u, v), phase_distance(u, v).epsilon, 1e-12);
  }
  // A rotation by 2e-9 about z: distance 2 sin(angle / 4) after the phase is removed.
  Matrix2 r = Matrix2::Identity();
  r(0, 0) = std::polar(1.0, -1e-9);
  r(1, 1) = std::polar(1.0, 1e-9);
  EXPECT_NEAR(phase_distance_2x2(r, Matrix2::Identity()), 2 * std::sin(0.5e-9), 1e-18);
}

TEST(Metrics, UnitarityCheck) {
  std::mt19937 rng(1);
  EXPECT_TRUE(is_unitary(random_unitary(rng, 5)));
  EXPECT_FALSE(is_unitary(2.0 * Matrix::Identity(2, 2)));
}

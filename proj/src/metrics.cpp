#include "fibraid/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace fibraid {

namespace {

void check_dims(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("distance: dimension mismatch");
}

double wrap(double a) {
  const double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a <= -std::numbers::pi) a += two_pi;
  if (a > std::numbers::pi) a -= two_pi;
  return a;
}

}  // namespace

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

double distance(const Matrix& u, const Matrix& v) {
  check_dims(u, v);
  return operator_norm(u - v);
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return operator_norm(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())) <= tol;
}

PhaseDistance phase_distance_numeric(const Matrix& u, const Matrix& v) {
  check_dims(u, v);
  auto f = [&](double phi) { return operator_norm(u - std::polar(1.0, phi) * v); };
  constexpr int kScan = 2048;
  const double step = 2.0 * std::numbers::pi / kScan;
  double best_phi = 0.0, best = f(0.0);
  for (int k = 1; k < kScan; ++k) {
    const double phi = -std::numbers::pi + k * step;
    const double val = f(phi);
    if (val < best) {
      best = val;
      best_phi = phi;
    }
  }
  const double inv_golden = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_phi - step, hi = best_phi + step;
  double x1 = hi - inv_golden * (hi - lo), x2 = lo + inv_golden * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_golden * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_golden * (hi - lo);
      f2 = f(x2);
    }
  }
  const double phi = 0.5 * (lo + hi);
  const double val = f(phi);
  if (val < best) return {val, wrap(phi)};
  return {best, wrap(best_phi)};
}

PhaseDistance phase_distance(const Matrix& u, const Matrix& v) {
  check_dims(u, v);
  if (u.rows() == 0) return {0.0, 0.0};
  if (!is_unitary(u) || !is_unitary(v)) return phase_distance_numeric(u, v);

  const Matrix m = v.adjoint() * u;
  const Eigen::ComplexEigenSolver<Matrix> es(m, false);
  std::vector<double> angles;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    angles.push_back(std::arg(es.eigenvalues()(k)));
  std::sort(angles.begin(), angles.end());
  // Largest empty gap on the circle; the covering arc is its complement.
  const double two_pi = 2.0 * std::numbers::pi;
  double gap = angles.front() + two_pi - angles.back();
  double arc_start = angles.front();
  for (std::size_t k = 1; k < angles.size(); ++k) {
    const double g = angles[k] - angles[k - 1];
    if (g > gap) {
      gap = g;
      arc_start = angles[k];
    }
  }
  const double arc = two_pi - gap;
  return {2.0 * std::sin(arc / 4.0), wrap(arc_start + arc / 2.0)};
}

double phase_distance_2x2(const Matrix2& u, const Matrix2& v) {
  const Matrix2 m = v.adjoint() * u;
  const Complex half_trace = 0.5 * (m(0, 0) + m(1, 1));
  const Complex a = m(0, 0) - half_trace;
  const Complex d = m(1, 1) - half_trace;
  // Eigenvalues half_trace +- sqrt(-det N) of the traceless part N; |l1 - l2| = 2 sin(delta/2).
  const double half_gap = std::sqrt(std::abs(a * d - m(0, 1) * m(1, 0)));
  const double delta = 2.0 * std::asin(std::min(1.0, half_gap));
  return 2.0 * std::sin(delta / 4.0);
}

}  // namespace fibraid

#pragma once

#include "fibraid/anyon_model.hpp"

namespace fibraid {

/// Operator-norm distance ||U - V|| (largest singular value).
/// Throws std::invalid_argument on a dimension mismatch.
double distance(const Matrix& u, const Matrix& v);

struct PhaseDistance {
  double epsilon;
  /// Minimizing phase phi in (-pi, pi]: epsilon = ||U - e^{i phi} V||.
  double phase;
};

/// min over phi of ||U - e^{i phi} V||.
///
/// For unitary arguments this is closed form: the eigenphases of V^dagger U lie on an arc
/// and the optimal phase is the arc's midpoint. Otherwise a dense scan is refined by
/// golden-section search to 1e-12 in phi.
PhaseDistance phase_distance(const Matrix& u, const Matrix& v);

/// Reference implementation of phase_distance by scan + golden section, used for
/// non-unitary inputs and by tests.
PhaseDistance phase_distance_numeric(const Matrix& u, const Matrix& v);

/// Operator-norm distance of ||U - e^{i phi} V|| minimized over phi for 2x2 unitaries,
/// computed from the traceless part of V^dagger U so that tiny distances keep full
/// absolute precision.
double phase_distance_2x2(const Matrix2& u, const Matrix2& v);

bool is_unitary(const Matrix& u, double tol = 1e-9);
double operator_norm(const Matrix& m);

}  // namespace fibraid

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace fibraid {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;

/// Tolerance used for identities that hold exactly in the algebra.
inline constexpr double kExactTol = 1e-12;

/// Charge label of a Fibonacci object. `One` is the anyon charge.
enum class QSpin : std::uint8_t { Zero = 0, One = 1 };

inline int to_int(QSpin q) { return static_cast<int>(q); }
inline QSpin qspin(int v) { return v == 0 ? QSpin::Zero : QSpin::One; }

/// Returns the allowed total charges of a fused with b, in ascending order.
std::vector<QSpin> fusion_outcomes(QSpin a, QSpin b);
bool fusion_allowed(QSpin a, QSpin b, QSpin c);

/// Fixed data of the Fibonacci model.
///
/// Exchange phases follow the convention R_0 = exp(-4 pi i / 5), R_1 = exp(3 pi i / 5)
/// for a clockwise exchange. The complex-conjugate convention is obtained by
/// flipping kChirality; every quantity this library reports that is invariant under
/// conjugation (distances, braid relations, block structure) is unaffected.
struct ModelConstants {
  static constexpr int kChirality = +1;

  static double tau();
  /// F^{111}_1 indexed by (e, f), real symmetric and involutive.
  static Eigen::Matrix2d f_matrix();
  static Complex r_zero();
  static Complex r_one();
  static Complex r(QSpin channel) { return channel == QSpin::Zero ? r_zero() : r_one(); }

  /// Tag written into serialized artifacts so they are not mixed across conventions.
  static const char* convention_tag();
};

/// General F-symbol F^{abc}_d[e, f]: ((a b)_e c)_d -> (a (b c)_f)_d.
/// Zero when any vertex is forbidden; 1 whenever an external leg is trivial.
double f_symbol(QSpin a, QSpin b, QSpin c, QSpin d, QSpin e, QSpin f);

}  // namespace fibraid

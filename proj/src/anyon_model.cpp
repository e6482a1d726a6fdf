#include "fibraid/anyon_model.hpp"

#include <cmath>
#include <numbers>

namespace fibraid {

std::vector<QSpin> fusion_outcomes(QSpin a, QSpin b) {
  if (a == QSpin::One && b == QSpin::One) return {QSpin::Zero, QSpin::One};
  if (a == QSpin::Zero) return {b};
  return {a};
}

bool fusion_allowed(QSpin a, QSpin b, QSpin c) {
  for (QSpin x : fusion_outcomes(a, b))
    if (x == c) return true;
  return false;
}

double ModelConstants::tau() { return (std::sqrt(5.0) - 1.0) / 2.0; }

Eigen::Matrix2d ModelConstants::f_matrix() {
  const double t = tau();
  const double s = std::sqrt(t);
  Eigen::Matrix2d f;
  f << t, s, s, -t;
  return f;
}

Complex ModelConstants::r_zero() {
  return std::polar(1.0, -4.0 * std::numbers::pi / 5.0 * kChirality);
}

Complex ModelConstants::r_one() {
  return std::polar(1.0, 3.0 * std::numbers::pi / 5.0 * kChirality);
}

const char* ModelConstants::convention_tag() {
  return kChirality > 0 ? "fibonacci:R0=exp(-4pi i/5),R1=exp(3pi i/5)"
                        : "fibonacci:R0=exp(4pi i/5),R1=exp(-3pi i/5)";
}

double f_symbol(QSpin a, QSpin b, QSpin c, QSpin d, QSpin e, QSpin f) {
  if (!fusion_allowed(a, b, e) || !fusion_allowed(e, c, d) || !fusion_allowed(b, c, f) ||
      !fusion_allowed(a, f, d))
    return 0.0;
  if (a == QSpin::One && b == QSpin::One && c == QSpin::One && d == QSpin::One)
    return ModelConstants::f_matrix()(to_int(e), to_int(f));
  return 1.0;
}

}  // namespace fibraid

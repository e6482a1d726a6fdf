#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "fibraid/anyon_model.hpp"
#include "fibraid/braid_word.hpp"
#include "fibraid/mitm.hpp"
#include "fibraid/weave.hpp"

namespace fibraid {

// SU(2) helpers. Quaternions are (w, x, y, z) with U = w I - i (x X + y Y + z Z).
Matrix2 su2_from_quaternion(double w, double x, double y, double z);
Eigen::Vector4d quaternion_of(const Matrix2& su2);
Matrix2 axis_angle(const Eigen::Vector3d& axis, double angle);
/// Divides out the determinant phase; the sign ambiguity is left to the caller.
Matrix2 strip_phase(const Matrix2& u);
/// Rotation angle in [0, 2pi] of an SU(2) element.
double rotation_angle(const Matrix2& su2);
Matrix2 haar_su2(std::uint64_t seed, std::uint64_t index);

struct NetEntry {
  BraidWord word;
  Matrix2 rotation;  // phase-stripped qubit block
};

struct BaseNetOptions {
  int mobile = 2;
  std::size_t max_memory_bytes = std::size_t{3} << 30;
  int threads = 0;
  int cover_samples = 1000;  // 0 skips the covering-radius measurement
  std::uint64_t seed = 1;
};

/// All canonical weaves of length <= base_length whose mobile strand returns to its start.
/// Held implicitly as a meet-in-the-middle index, so lookups are exact nearest neighbours.
class BaseNet {
 public:
  BaseNet(int base_length, const BaseNetOptions& options);
  BaseNet(int base_length, int mobile, const std::vector<std::vector<Crossing>>& prefixes,
          const std::vector<std::vector<Crossing>>& suffixes, int threads = 0);

  int max_base_length() const { return base_length_; }
  int mobile() const { return mobile_; }
  const WordSpace& space() const { return block_->space(); }
  const MitmIndex& index() const { return *block_; }

  /// Nearest net word to a qubit-block or full target.
  SearchResult nearest(const GateTarget& target) const;

  double covering_radius() const { return covering_radius_; }
  void set_covering_radius(double r) { covering_radius_ = r; }

  /// Explicit list; throws ResourceGuardError beyond the limit.
  std::vector<NetEntry> entries(std::size_t limit = 2'000'000) const;

 private:
  int base_length_;
  int mobile_;
  int threads_;
  double covering_radius_ = -1.0;
  std::unique_ptr<MitmIndex> block_;
  mutable std::unique_ptr<MitmIndex> full_;
  std::unique_ptr<std::mutex> full_mutex_ = std::make_unique<std::mutex>();
};

BaseNet build_base_net(int base_length, const BaseNetOptions& options = {});

/// Max over sampled Haar rotations of the phase-free distance to the nearest net element.
double measure_covering_radius(const BaseNet& net, int samples, std::uint64_t seed);

struct Commutator {
  Matrix2 v;
  Matrix2 w;
};

/// Balanced group commutator: V W V^-1 W^-1 = delta for delta in SU(2) with angle < pi/2.
/// Throws std::domain_error otherwise.
Commutator group_commutator_decompose(const Matrix2& delta);

struct SkLevel {
  int depth = 0;
  double epsilon = 0.0;
  std::size_t length = 0;
};

struct SkResult {
  BraidWord word;
  double epsilon = 0.0;
  std::vector<SkLevel> trace;  // the main chain U_0 .. U_depth
};

/// Solovay-Kitaev refinement over a return-to-start net. Full targets must be
/// block diagonal; their |NC> phase is matched only at depth 0.
SkResult sk_refine(const GateTarget& target, int depth, const BaseNet& net);

/// Least-squares fit of log(length) = c log|log eps| + b.
struct ScalingFit {
  double exponent = 0.0;
  double intercept = 0.0;
};
ScalingFit fit_length_exponent(const std::vector<SkLevel>& trace);

}  // namespace fibraid

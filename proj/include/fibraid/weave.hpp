#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fibraid/braid_word.hpp"

namespace fibraid {

/// A braid word in which one mobile strand takes part in every crossing.
struct Weave {
  BraidWord word;
  /// Strand id (= its starting position) of the mobile strand.
  int mobile = 1;
  int start_pos = 1;
  int end_pos = 1;
  /// strand_at[p - 1] is the id of the strand found at position p after the word.
  std::vector<int> strand_at;
};

struct WeaveRejection {
  std::size_t crossing;  // 0-based index of the first offending crossing
  std::string reason;
};

struct WeaveClassification {
  std::optional<Weave> weave;
  std::optional<WeaveRejection> rejection;

  explicit operator bool() const { return weave.has_value(); }
};

/// Replays the word tracking strand positions and accepts it iff every crossing involves
/// the strand starting at `mobile_start`.
WeaveClassification classify_weave(const BraidWord& word, int mobile_start);

/// Position reached by a mobile strand starting at `start` if it takes part in every
/// crossing; nullopt otherwise.
std::optional<int> weave_end_position(const BraidWord& word, int start);

enum class TargetMode { Full, QubitBlockOnly };

/// A gate to approximate.
///
/// Full targets are compared on the whole representation; QubitBlockOnly targets are 2x2
/// and compared on the total-charge-1 block only (the |NC> phase is unconstrained).
struct GateTarget {
  Matrix matrix;
  TargetMode mode = TargetMode::Full;
  bool phase_free = true;
  std::string name;
};

/// Validates unitarity (1e-12) and the QubitBlockOnly 2x2 shape.
GateTarget make_target(Matrix matrix, TargetMode mode, bool phase_free, std::string name);

/// Distance of an evaluated 3-strand unitary to a target, honouring mode and phase_free.
double target_distance(const Matrix& evaluated, const GateTarget& target);

/// Optimal phase (0 when phase_free is false) for target_distance.
double target_phase(const Matrix& evaluated, const GateTarget& target);

}  // namespace fibraid

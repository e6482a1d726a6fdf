#pragma once

#include <string>
#include <vector>

#include "fibraid/weave.hpp"

namespace fibraid {

/// Gate targets by name:
///   not, hadamard, z, axis:X,Y,Z,ANGLE       qubit-block rotations (phase-free)
///   identity, effective:M, s1^E, s2^E        full 3x3 matrices (phase-free)
/// Throws std::invalid_argument on an unknown or malformed name.
GateTarget named_target(const std::string& name);

std::vector<std::string> target_name_forms();

}  // namespace fibraid

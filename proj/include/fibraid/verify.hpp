#pragma once

#include <random>
#include <string>
#include <vector>

#include "fibraid/braid_word.hpp"

namespace fibraid {

/// Random 3-strand weave whose mobile strand starts and ends at position 1.
BraidWord random_return_weave(std::mt19937& rng, int runs);

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Quick invariant checks across all modules (a few seconds). Sampling uses `seed`.
std::vector<PropertyResult> run_invariant_suite(unsigned seed = 7, int threads = 0);

}  // namespace fibraid

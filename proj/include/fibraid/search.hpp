#pragma once

#include <cstddef>
#include <string>

#include "fibraid/braid_word.hpp"
#include "fibraid/weave.hpp"
#include "fibraid/weave_space.hpp"

namespace fibraid {

/// Options for 3-strand searches. Mode and phase handling come from the GateTarget.
struct SearchOptions {
  /// Interchange budget.
  int max_length = 10;
  bool weave_only = false;
  int mobile_start = 1;
  int mobile_end = 1;
  /// OpenMP threads for sharded work; 0 uses the runtime default.
  int parallel_shards = 0;
  /// Exhaustive guard: refuse to visit more search nodes than this.
  double max_nodes = 2e10;
  /// Meet-in-the-middle guard on half-table memory.
  std::size_t max_memory_bytes = std::size_t{3} << 30;

  WordSpace space() const { return {max_length, weave_only, mobile_start, mobile_end}; }
};

struct SearchResult {
  BraidWord best_word{3, {}};
  /// Distance of evaluate(best_word) to the target, recomputed from scratch.
  double epsilon = 0.0;
  /// Optimal global phase when the target is phase-free.
  double phase = 0.0;
  /// Words scored (exhaustive) or half words tabulated (meet-in-the-middle).
  double words_examined = 0.0;
  std::size_t tied_candidates = 0;
  std::string wall_notes;
};

/// Minimum-distance word over the whole space, ties by length then text. Deterministic
/// for any shard count. Throws ResourceGuardError above max_nodes and
/// std::invalid_argument when no word satisfies the weave endpoints.
SearchResult exhaustive_search(const GateTarget& target, const SearchOptions& opts);

/// Single-threaded depth-first reference for exhaustive_search.
SearchResult exhaustive_search_serial(const GateTarget& target, const SearchOptions& opts);

/// Same optimum as exhaustive_search, found by splitting words into a prefix and a suffix
/// and matching them through a spatial hash. Throws ResourceGuardError when the half
/// tables would exceed max_memory_bytes.
SearchResult mitm_search(const GateTarget& target, const SearchOptions& opts);

enum class SearchMethod { Exhaustive, MeetInTheMiddle };

/// Target matrix of braiding the two static strands of a 3-strand weave m full turns:
/// sigma_2^{2m} for a mobile strand at position 1.
Matrix effective_braiding_target(int m);

/// Weave, mobile at 1 returning to 1, approximating sigma_2^{2m} (full 3x3, phase-free).
SearchResult find_effective_braiding_weave(int m, SearchOptions opts,
                                           SearchMethod method = SearchMethod::MeetInTheMiddle);
/// Weave carrying the mobile strand from position 1 to 3 while approximating the identity.
SearchResult find_injection_weave(SearchOptions opts,
                                  SearchMethod method = SearchMethod::MeetInTheMiddle);
/// Weave, mobile in the middle position returning there, approximating X on the qubit block.
SearchResult find_not_weave(SearchOptions opts,
                            SearchMethod method = SearchMethod::MeetInTheMiddle);

/// Finishes a result from a winning run list: recomputes epsilon and phase.
SearchResult finish_result(const std::vector<Crossing>& runs, const GateTarget& target,
                           double examined, std::size_t tied, std::string notes);

}  // namespace fibraid

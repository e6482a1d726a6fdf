#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "fibraid/search.hpp"
#include "fibraid/weave_space.hpp"

namespace fibraid {

/// One half of a split word: its qubit block, writhe, and run list.
struct HalfWord {
  Matrix2 block;
  std::uint32_t run_offset = 0;
  std::uint8_t run_count = 0;
  std::uint8_t length = 0;
  std::int8_t writhe = 0;      // mod 10
  std::int8_t pos_start = 0;   // mobile position before the half (0 when not tracked)
  std::int8_t pos_end = 0;     // mobile position after the half
  std::int8_t first_index = 0; // generator of the first run, 0 when empty
  std::int8_t last_index = 0;
};

/// All words of a space, split as prefix * suffix, indexed for nearest-target queries.
///
/// Every canonical word of length <= L factors as a prefix of whole runs with length
/// <= ceil-half plus a suffix with length <= L - half + 4, so a query that scans every
/// suffix and probes the prefix index within the current best radius is exact.
/// The prefix index is a 4D grid over unit quaternions: for qubit-block targets the
/// phase-stripped SU(2) block (both signs probed), for full targets the block divided by
/// its |NC> phase and split by writhe class, which fixes the determinant.
class MitmIndex {
 public:
  /// Throws ResourceGuardError when the tables would exceed max_memory_bytes.
  MitmIndex(const WordSpace& space, TargetMode mode, std::size_t max_memory_bytes,
            int threads = 0);

  /// Rebuilds an index from stored half words (prefix and suffix run lists).
  /// Throws std::invalid_argument if a run list does not belong to the space.
  MitmIndex(const WordSpace& space, TargetMode mode,
            const std::vector<std::vector<Crossing>>& prefix_words,
            const std::vector<std::vector<Crossing>>& suffix_words, int threads = 0);

  /// Exact optimum over the space with the same tie-breaking as exhaustive search.
  SearchResult nearest(const GateTarget& target) const;

  const WordSpace& space() const { return space_; }
  TargetMode mode() const { return mode_; }
  std::size_t prefix_count() const { return prefixes_.size(); }
  std::size_t suffix_count() const { return suffixes_.size(); }
  double cell_size() const { return cell_; }

  /// Memory the tables for this space would need.
  static std::size_t estimate_bytes(const WordSpace& space);

  std::vector<Crossing> prefix_runs(std::size_t i) const;
  std::vector<Crossing> suffix_runs(std::size_t i) const;
  const std::vector<HalfWord>& prefixes() const { return prefixes_; }
  const std::vector<HalfWord>& suffixes() const { return suffixes_; }

 private:
  struct Cell {
    std::uint32_t begin;
    std::uint32_t end;
  };
  using Grid = std::unordered_map<std::uint64_t, Cell>;

  void build_tables();
  void add_half(const std::vector<Crossing>& runs, bool suffix);
  void build_grid();
  std::uint64_t key_of(const double* q) const;

  WordSpace space_;
  TargetMode mode_;
  int threads_;
  int prefix_max_ = 0;
  int suffix_max_ = 0;
  double cell_ = 0.1;
  std::vector<HalfWord> prefixes_;
  std::vector<HalfWord> suffixes_;
  std::vector<std::int8_t> prefix_runs_;  // packed (k, e) pairs
  std::vector<std::int8_t> suffix_runs_;
  // Per writhe class (1 class for qubit-block mode): sorted prefix ids and cell ranges.
  std::vector<std::vector<std::uint32_t>> order_;
  std::vector<Grid> grids_;
};

}  // namespace fibraid

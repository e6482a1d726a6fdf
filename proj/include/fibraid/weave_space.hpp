#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibraid/braid_word.hpp"
#include "fibraid/weave.hpp"

namespace fibraid {

/// Thrown when a search or net would exceed its configured work or memory budget.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The set of canonical 3-strand words a search ranges over.
///
/// Words are sequences of runs sigma_k^e with k alternating and e in (-5, 5] \ {0}.
/// With weave_only, each run must involve the mobile strand, which starts at
/// mobile_start and must finish at mobile_end.
struct WordSpace {
  int max_length = 10;
  bool weave_only = false;
  int mobile_start = 1;
  int mobile_end = 1;

  /// Throws std::invalid_argument on bad lengths or positions.
  void validate() const;
  /// Whether a run on generator k is allowed with the mobile strand at pos.
  bool allows(int k, int pos) const { return !weave_only || pos == k || pos == k + 1; }
  bool accepts_end(int pos) const { return !weave_only || pos == mobile_end; }
};

/// Exponents of a canonical run, in enumeration order.
inline constexpr std::array<int, 9> kRunExponents{1, -1, 2, -2, 3, -3, 4, -4, 5};

inline int move_mobile(int pos, int k, int e) {
  if ((e & 1) == 0) return pos;
  if (pos == k) return k + 1;
  if (pos == k + 1) return k;
  return pos;
}

/// 3-strand unitary as its qubit block plus the writhe (mod 10) that fixes the |NC> phase.
struct Element {
  Matrix2 block = Matrix2::Identity();
  int writhe = 0;
};

/// Per-generator-power qubit blocks and the |NC> phase table of the 3-strand representation.
class RunTable {
 public:
  RunTable();
  const Matrix2& block(int k, int e) const { return blocks_[k - 1][slot(e)]; }
  Complex nc_phase(int writhe) const { return nc_[((writhe % 10) + 10) % 10]; }
  Matrix full(const Element& el) const;

  static int slot(int e) { return ((e % 10) + 10) % 10; }

 private:
  std::array<std::array<Matrix2, 10>, 2> blocks_;
  std::array<Complex, 10> nc_;
};

const RunTable& run_table();

/// Precise, cheap distance of an Element to a target.
class Scorer {
 public:
  explicit Scorer(const GateTarget& target);
  double epsilon(const Matrix2& block, int writhe) const;
  double epsilon(const Element& el) const { return epsilon(el.block, el.writhe); }
  const GateTarget& target() const { return target_; }

 private:
  GateTarget target_;
  Matrix2 target_block_adj_;
  Complex target_nc_conj_ = 1.0;
  bool generic_ = false;
};

/// Number of words in the space (counting all accepted lengths <= max_length).
double count_words(const WordSpace& space);
/// Number of search-tree nodes visited by exhaustive enumeration.
double count_nodes(const WordSpace& space);

/// Candidates whose distance is within kTieTol of the best seen; resolves ties by
/// shorter length, then lexicographically smaller text.
class CandidateSet {
 public:
  static constexpr double kTieTol = 1e-12;

  bool offer(double eps, const std::vector<Crossing>& runs);
  void merge(const CandidateSet& other);
  double best() const { return best_; }
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  /// Winner by (length, text) among candidates within tolerance of the best.
  std::vector<Crossing> winner() const;

 private:
  struct Item {
    double eps;
    std::vector<Crossing> runs;
  };
  void prune();
  double best_ = std::numeric_limits<double>::infinity();
  std::vector<Item> items_;
};

}  // namespace fibraid

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fibraid/anyon_model.hpp"

namespace fibraid {

/// Fib(1) = Fib(2) = 1.
std::uint64_t fibonacci(int k);

/// Left-to-right fusion chain of n anyons: labels[k] is the charge of anyons 1..k+2.
struct FusionPath {
  std::vector<QSpin> labels;

  QSpin total() const { return labels.back(); }
  /// Nested notation, e.g. "((•,•)_0,•)_1".
  std::string to_string() const;
  bool operator==(const FusionPath&) const = default;
};

struct ChargeBlock {
  QSpin charge;
  std::size_t begin;
  std::size_t end;

  std::size_t size() const { return end - begin; }
  bool contains(std::size_t i) const { return i >= begin && i < end; }
};

/// Ordered fusion-chain basis. The total-charge-1 block comes first, then the
/// total-charge-0 block; inside a block paths are sorted lexicographically by labels.
/// For three anyons this gives (|0_L>, |1_L>, |NC>).
class FusionBasis {
 public:
  /// Throws std::invalid_argument for n < 1.
  static FusionBasis enumerate(int n);

  int anyons() const { return n_; }
  std::size_t dim() const { return paths_.size(); }
  const std::vector<FusionPath>& paths() const { return paths_; }
  const std::vector<ChargeBlock>& blocks() const { return blocks_; }
  /// Block of the given total charge; empty range when that charge does not occur.
  ChargeBlock block(QSpin charge) const;
  std::optional<std::size_t> index_of(const FusionPath& path) const;

 private:
  int n_ = 0;
  std::vector<FusionPath> paths_;
  std::vector<ChargeBlock> blocks_;
};

/// Assignment of anyons to encoded qubits: consecutive triplets of strands (1-based).
struct QubitLayout {
  int anyons = 0;
  std::vector<std::array<int, 3>> triplets;

  static QubitLayout single_qubit() { return {3, {{1, 2, 3}}}; }
  static QubitLayout two_qubits() { return {6, {{1, 2, 3}, {4, 5, 6}}}; }
};

/// Basis adapted to a qubit layout together with the computational index sets.
///
/// For two qubits the adapted basis is the tree ((1 2)_c 3)_a ((4 5)_t 6)_b fused to a
/// total charge T; a computational state has a = b = 1 and its qubit values are (c, t).
/// States are ordered like FusionBasis: T = 1 block first, then lexicographic in
/// (c, a, t, b). For one qubit the adapted basis is the chain basis itself.
struct QubitEmbedding {
  QubitLayout layout;
  /// Unitary taking chain-basis amplitudes to adapted-basis amplitudes.
  Matrix to_layout_basis;
  std::vector<std::string> state_labels;
  std::vector<ChargeBlock> blocks;
  /// Per block (same order as `blocks`), adapted-basis indices of computational
  /// states ordered by qubit value: |0..0>, |0..1>, ... (control is the high bit).
  std::vector<std::vector<std::size_t>> computational;
  std::vector<std::size_t> noncomputational;

  std::size_t computational_count() const;
};

/// Throws std::invalid_argument unless the layout is one triplet over 3 anyons or two
/// disjoint consecutive triplets {1,2,3},{4,5,6} over 6 anyons.
QubitEmbedding computational_embedding(const QubitLayout& layout);

}  // namespace fibraid

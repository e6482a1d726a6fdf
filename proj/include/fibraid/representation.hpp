#pragma once

#include <array>
#include <vector>

#include "fibraid/anyon_model.hpp"
#include "fibraid/fusion_basis.hpp"

namespace fibraid {

/// Complex unitary carrying its total-charge block structure.
struct BlockUnitary {
  Matrix entries;
  std::vector<ChargeBlock> blocks;

  Eigen::Index dim() const { return entries.rows(); }
  /// ||U^dagger U - I|| in operator norm.
  double unitarity_defect() const;
  /// Largest |entry| coupling different charge blocks.
  double off_block_magnitude() const;
  /// Sub-matrix of one block.
  Matrix block_matrix(const ChargeBlock& b) const;
};

/// sigma_i for n anyons (clockwise exchange of anyons i and i+1, 1-based).
/// Throws std::invalid_argument when i is outside 1..n-1.
BlockUnitary generator(int n, int i);

/// Generators of the n-anyon representation with their powers folded into (-5, 5].
class Representation {
 public:
  explicit Representation(int n);

  int anyons() const { return n_; }
  const FusionBasis& basis() const { return basis_; }
  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis_.dim()); }
  const BlockUnitary& generator(int i) const;
  /// sigma_i^e for any integer e (reduced mod 10).
  const Matrix& power(int i, int e) const;
  Matrix identity() const { return Matrix::Identity(dim(), dim()); }

 private:
  int n_;
  FusionBasis basis_;
  std::vector<BlockUnitary> gens_;
  std::vector<std::array<Matrix, 10>> powers_;
};

/// Shared, lazily built representation for n anyons (n <= 16). Thread-safe.
const Representation& representation(int n);

}  // namespace fibraid

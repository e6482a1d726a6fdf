#include "fibraid/weave.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "fibraid/metrics.hpp"

namespace fibraid {

WeaveClassification classify_weave(const BraidWord& word, int mobile_start) {
  WeaveClassification out;
  if (mobile_start < 1 || mobile_start > word.n_strands) {
    out.rejection = WeaveRejection{0, "mobile start position out of range"};
    return out;
  }
  std::vector<int> strand_at(static_cast<std::size_t>(word.n_strands));
  std::iota(strand_at.begin(), strand_at.end(), 1);
  int pos = mobile_start;
  for (std::size_t k = 0; k < word.crossings.size(); ++k) {
    const auto& c = word.crossings[k];
    if (c.index < 1 || c.index >= word.n_strands) {
      out.rejection = WeaveRejection{k, "generator index out of range"};
      return out;
    }
    if (pos != c.index && pos != c.index + 1) {
      out.rejection = WeaveRejection{
          k, "crossing s" + std::to_string(c.index) + " does not involve the mobile strand at " +
                 std::to_string(pos)};
      return out;
    }
    if (std::abs(c.exponent) % 2 == 1) {
      std::swap(strand_at[static_cast<std::size_t>(c.index - 1)],
                strand_at[static_cast<std::size_t>(c.index)]);
      pos = pos == c.index ? c.index + 1 : c.index;
    }
  }
  out.weave = Weave{word, mobile_start, mobile_start, pos, std::move(strand_at)};
  return out;
}

std::optional<int> weave_end_position(const BraidWord& word, int start) {
  auto c = classify_weave(word, start);
  if (!c) return std::nullopt;
  return c.weave->end_pos;
}

GateTarget make_target(Matrix matrix, TargetMode mode, bool phase_free, std::string name) {
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("target must be square");
  if (mode == TargetMode::QubitBlockOnly && matrix.rows() != 2)
    throw std::invalid_argument("qubit-block targets must be 2x2");
  if (!is_unitary(matrix, kExactTol)) throw std::invalid_argument("target is not unitary");
  return {std::move(matrix), mode, phase_free, std::move(name)};
}

namespace {

Matrix restrict_for(const Matrix& evaluated, const GateTarget& target) {
  if (target.mode == TargetMode::QubitBlockOnly) return evaluated.topLeftCorner(2, 2);
  if (evaluated.rows() != target.matrix.rows())
    throw std::invalid_argument("target dimension does not match the representation");
  return evaluated;
}

}  // namespace

double target_distance(const Matrix& evaluated, const GateTarget& target) {
  const Matrix u = restrict_for(evaluated, target);
  if (!target.phase_free) return distance(u, target.matrix);
  return phase_distance(u, target.matrix).epsilon;
}

double target_phase(const Matrix& evaluated, const GateTarget& target) {
  if (!target.phase_free) return 0.0;
  return phase_distance(restrict_for(evaluated, target), target.matrix).phase;
}

}  // namespace fibraid

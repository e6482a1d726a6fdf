#include "fibraid/weave_space.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "fibraid/metrics.hpp"
#include "fibraid/representation.hpp"

namespace fibraid {

void WordSpace::validate() const {
  if (max_length < 0) throw std::invalid_argument("max_length must be >= 0");
  if (weave_only) {
    if (mobile_start < 1 || mobile_start > 3 || mobile_end < 1 || mobile_end > 3)
      throw std::invalid_argument("weave endpoints must be positions 1..3");
  }
}

RunTable::RunTable() {
  const auto& rep = representation(3);
  for (int k = 1; k <= 2; ++k)
    for (int e = 0; e < 10; ++e) blocks_[k - 1][e] = rep.power(k, e).topLeftCorner(2, 2);
  Complex z = 1.0;
  for (int w = 0; w < 10; ++w) {
    nc_[w] = z;
    z *= ModelConstants::r_one();
  }
}

Matrix RunTable::full(const Element& el) const {
  Matrix m = Matrix::Zero(3, 3);
  m.topLeftCorner(2, 2) = el.block;
  m(2, 2) = nc_phase(el.writhe);
  return m;
}

const RunTable& run_table() {
  static const RunTable table;
  return table;
}

Scorer::Scorer(const GateTarget& target) : target_(target) {
  if (target.mode == TargetMode::QubitBlockOnly) {
    target_block_adj_ = target.matrix.adjoint();
    return;
  }
  if (target.matrix.rows() != 3)
    throw std::invalid_argument("full-mode targets for 3-strand search must be 3x3");
  const auto& m = target.matrix;
  const double off = std::abs(m(0, 2)) + std::abs(m(1, 2)) + std::abs(m(2, 0)) + std::abs(m(2, 1));
  generic_ = off > kExactTol;
  target_block_adj_ = m.topLeftCorner(2, 2).adjoint();
  target_nc_conj_ = std::conj(m(2, 2));
}

namespace {

double arc_epsilon(double a, double b, double c) {
  const double two_pi = 2.0 * std::numbers::pi;
  double v[3] = {a, b, c};
  std::sort(v, v + 3);
  const double gap = std::max({v[1] - v[0], v[2] - v[1], v[0] + two_pi - v[2]});
  return 2.0 * std::sin((two_pi - gap) / 4.0);
}

}  // namespace

double Scorer::epsilon(const Matrix2& block, int writhe) const {
  if (generic_) {
    Element el{block, writhe};
    return target_distance(run_table().full(el), target_);
  }
  const Matrix2 m = target_block_adj_ * block;
  const Complex half_trace = 0.5 * (m(0, 0) + m(1, 1));
  const Complex a = m(0, 0) - half_trace;
  const Complex d = m(1, 1) - half_trace;
  const Complex s = std::sqrt(-(a * d - m(0, 1) * m(1, 0)));

  if (target_.mode == TargetMode::QubitBlockOnly && target_.phase_free)
    return 2.0 * std::sin(std::asin(std::min(1.0, std::abs(s))) / 2.0);

  const double a1 = std::arg(half_trace + s);
  const double a2 = std::arg(half_trace - s);
  if (target_.mode == TargetMode::QubitBlockOnly)
    return 2.0 * std::sin(std::max(std::abs(a1), std::abs(a2)) / 2.0);

  const double a3 = std::arg(target_nc_conj_ * run_table().nc_phase(writhe));
  if (target_.phase_free) return arc_epsilon(a1, a2, a3);
  return 2.0 * std::sin(std::max({std::abs(a1), std::abs(a2), std::abs(a3)}) / 2.0);
}

namespace {

// Words (accepted) and nodes reachable from state (pos, last index, remaining budget).
struct Counter {
  const WordSpace& space;
  std::map<std::tuple<int, int, int>, std::pair<double, double>> memo;

  std::pair<double, double> run(int pos, int last, int remaining) {
    const auto key = std::make_tuple(pos, last, remaining);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    double words = space.accepts_end(pos) ? 1.0 : 0.0;
    double nodes = 1.0;
    for (int k = 1; k <= 2; ++k) {
      if (k == last || !space.allows(k, pos)) continue;
      for (int e : kRunExponents) {
        if (std::abs(e) > remaining) continue;
        const auto [w, n] = run(move_mobile(pos, k, e), k, remaining - std::abs(e));
        words += w;
        nodes += n;
      }
    }
    return memo[key] = {words, nodes};
  }
};

}  // namespace

double count_words(const WordSpace& space) {
  Counter c{space, {}};
  return c.run(space.weave_only ? space.mobile_start : 0, 0, space.max_length).first;
}

double count_nodes(const WordSpace& space) {
  Counter c{space, {}};
  return c.run(space.weave_only ? space.mobile_start : 0, 0, space.max_length).second;
}

namespace {

int runs_length(const std::vector<Crossing>& runs) {
  int n = 0;
  for (const auto& c : runs) n += std::abs(c.exponent);
  return n;
}

}  // namespace

bool CandidateSet::offer(double eps, const std::vector<Crossing>& runs) {
  if (eps > best_ + kTieTol) return false;
  items_.push_back({eps, runs});
  if (eps < best_) {
    best_ = eps;
    prune();
  }
  return true;
}

void CandidateSet::merge(const CandidateSet& other) {
  for (const auto& it : other.items_) offer(it.eps, it.runs);
}

void CandidateSet::prune() {
  std::erase_if(items_, [&](const Item& it) { return it.eps > best_ + kTieTol; });
}

std::vector<Crossing> CandidateSet::winner() const {
  if (items_.empty()) return {};
  const Item* best = nullptr;
  std::string best_text;
  for (const auto& it : items_) {
    const std::string text = format(BraidWord{3, it.runs});
    if (best == nullptr) {
      best = &it;
      best_text = text;
      continue;
    }
    const int la = runs_length(it.runs), lb = runs_length(best->runs);
    if (la < lb || (la == lb && text < best_text)) {
      best = &it;
      best_text = text;
    }
  }
  return best->runs;
}

}  // namespace fibraid

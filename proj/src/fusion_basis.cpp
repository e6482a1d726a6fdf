#include "fibraid/fusion_basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace fibraid {

std::uint64_t fibonacci(int k) {
  if (k < 1) throw std::invalid_argument("fibonacci: index must be >= 1");
  std::uint64_t a = 1, b = 1;
  for (int i = 3; i <= k; ++i) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return b;
}

std::string FusionPath::to_string() const {
  std::string s = "•";
  if (labels.empty()) return s;
  for (std::size_t k = 0; k < labels.size(); ++k)
    s = "(" + s + ",•)_" + std::to_string(to_int(labels[k]));
  return s;
}

namespace {

void extend(std::vector<QSpin>& prefix, int remaining, std::vector<FusionPath>& out) {
  if (remaining == 0) {
    out.push_back({prefix});
    return;
  }
  const QSpin last = prefix.empty() ? QSpin::One : prefix.back();
  for (QSpin next : fusion_outcomes(last, QSpin::One)) {
    prefix.push_back(next);
    extend(prefix, remaining - 1, out);
    prefix.pop_back();
  }
}

std::vector<ChargeBlock> blocks_from_totals(const std::vector<QSpin>& totals) {
  std::vector<ChargeBlock> blocks;
  for (std::size_t i = 0; i < totals.size(); ++i) {
    if (blocks.empty() || blocks.back().charge != totals[i])
      blocks.push_back({totals[i], i, i + 1});
    else
      blocks.back().end = i + 1;
  }
  return blocks;
}

}  // namespace

FusionBasis FusionBasis::enumerate(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_basis: need at least one anyon");
  FusionBasis basis;
  basis.n_ = n;
  if (n == 1) {
    // A lone anyon: one state of total charge 1 and no intermediate labels.
    basis.paths_.push_back({});
    basis.blocks_.push_back({QSpin::One, 0, 1});
    return basis;
  }
  std::vector<QSpin> prefix;
  extend(prefix, n - 1, basis.paths_);
  std::stable_sort(basis.paths_.begin(), basis.paths_.end(),
                   [](const FusionPath& x, const FusionPath& y) {
                     if (x.total() != y.total()) return x.total() == QSpin::One;
                     return x.labels < y.labels;
                   });
  std::vector<QSpin> totals;
  for (const auto& p : basis.paths_) totals.push_back(p.total());
  basis.blocks_ = blocks_from_totals(totals);
  return basis;
}

ChargeBlock FusionBasis::block(QSpin charge) const {
  for (const auto& b : blocks_)
    if (b.charge == charge) return b;
  return {charge, dim(), dim()};
}

std::optional<std::size_t> FusionBasis::index_of(const FusionPath& path) const {
  for (std::size_t i = 0; i < paths_.size(); ++i)
    if (paths_[i] == path) return i;
  return std::nullopt;
}

std::size_t QubitEmbedding::computational_count() const {
  std::size_t n = 0;
  for (const auto& c : computational) n += c.size();
  return n;
}

namespace {

QubitEmbedding single_qubit_embedding(const QubitLayout& layout) {
  const auto basis = FusionBasis::enumerate(3);
  QubitEmbedding e;
  e.layout = layout;
  e.to_layout_basis = Matrix::Identity(3, 3);
  e.blocks = basis.blocks();
  for (const auto& p : basis.paths()) {
    const bool comp = p.total() == QSpin::One;
    std::string label = comp ? (p.labels[0] == QSpin::Zero ? "|0_L>" : "|1_L>") : "|NC>";
    e.state_labels.push_back(label + " " + p.to_string());
  }
  for (const auto& b : e.blocks) {
    std::vector<std::size_t> comp;
    for (std::size_t i = b.begin; i < b.end; ++i) {
      if (b.charge == QSpin::One)
        comp.push_back(i);
      else
        e.noncomputational.push_back(i);
    }
    e.computational.push_back(comp);
  }
  return e;
}

struct TreeState {
  QSpin c, a, t, b, total;
};

QubitEmbedding two_qubit_embedding(const QubitLayout& layout) {
  const auto chain = FusionBasis::enumerate(6);

  std::vector<TreeState> tree;
  for (QSpin c : {QSpin::Zero, QSpin::One})
    for (QSpin a : fusion_outcomes(c, QSpin::One))
      for (QSpin t : {QSpin::Zero, QSpin::One})
        for (QSpin b : fusion_outcomes(t, QSpin::One))
          for (QSpin total : fusion_outcomes(a, b)) tree.push_back({c, a, t, b, total});
  std::stable_sort(tree.begin(), tree.end(), [](const TreeState& x, const TreeState& y) {
    if (x.total != y.total) return x.total == QSpin::One;
    auto key = [](const TreeState& s) {
      return std::array<int, 4>{to_int(s.c), to_int(s.a), to_int(s.t), to_int(s.b)};
    };
    return key(x) < key(y);
  });

  QubitEmbedding e;
  e.layout = layout;
  const auto n = static_cast<Eigen::Index>(chain.dim());
  e.to_layout_basis = Matrix::Zero(n, n);
  // Chain labels (c, a, x3, x4, T): ((A 4)_x3 5)_x4 -> (A (4 5)_t)_x4, then
  // ((A (45)_t)_x4 6)_T -> (A ((45)_t 6)_b)_T.
  for (std::size_t row = 0; row < tree.size(); ++row) {
    const auto& s = tree[row];
    for (std::size_t col = 0; col < chain.dim(); ++col) {
      const auto& l = chain.paths()[col].labels;
      if (l[0] != s.c || l[1] != s.a || l[4] != s.total) continue;
      const double amp = f_symbol(s.a, QSpin::One, QSpin::One, l[3], l[2], s.t) *
                         f_symbol(s.a, s.t, QSpin::One, s.total, l[3], s.b);
      e.to_layout_basis(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = amp;
    }
  }

  std::vector<QSpin> totals;
  for (const auto& s : tree) {
    totals.push_back(s.total);
    e.state_labels.push_back("((•,•)_" + std::to_string(to_int(s.c)) + ",•)_" +
                             std::to_string(to_int(s.a)) + " ((•,•)_" +
                             std::to_string(to_int(s.t)) + ",•)_" + std::to_string(to_int(s.b)) +
                             " ; " + std::to_string(to_int(s.total)));
  }
  e.blocks = blocks_from_totals(totals);
  for (const auto& blk : e.blocks) {
    std::vector<std::size_t> comp;
    for (std::size_t i = blk.begin; i < blk.end; ++i) {
      if (tree[i].a == QSpin::One && tree[i].b == QSpin::One)
        comp.push_back(i);
      else
        e.noncomputational.push_back(i);
    }
    e.computational.push_back(comp);
  }
  return e;
}

}  // namespace

QubitEmbedding computational_embedding(const QubitLayout& layout) {
  if (layout.anyons == 3 && layout.triplets.size() == 1 &&
      layout.triplets[0] == std::array<int, 3>{1, 2, 3})
    return single_qubit_embedding(layout);
  if (layout.anyons == 6 && layout.triplets.size() == 2 &&
      layout.triplets[0] == std::array<int, 3>{1, 2, 3} &&
      layout.triplets[1] == std::array<int, 3>{4, 5, 6})
    return two_qubit_embedding(layout);
  throw std::invalid_argument(
      "computational_embedding: supported layouts are {1,2,3} over 3 anyons or "
      "{1,2,3},{4,5,6} over 6 anyons");
}

}  // namespace fibraid

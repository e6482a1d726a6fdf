#include "fibraid/mitm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include <omp.h>

#include "fibraid/metrics.hpp"

namespace fibraid {

namespace {

using Quat = std::array<double, 4>;

// Nearest point of the quaternion subspace {[[a, b], [-conj b, conj a]]}; exact for SU(2).
Quat project(const Matrix2& m) {
  const Complex a = 0.5 * (m(0, 0) + std::conj(m(1, 1)));
  const Complex b = 0.5 * (m(0, 1) - std::conj(m(1, 0)));
  return {a.real(), a.imag(), b.real(), b.imag()};
}

Quat su2_quat(const Matrix2& m) { return project(m / std::sqrt(m.determinant())); }

double det_angle_step() { return std::arg(ModelConstants::r_zero() / ModelConstants::r_one()); }

Complex class_rotation(int k) { return std::polar(1.0, -0.5 * det_angle_step() * k); }

int wrap10(int w) { return ((w % 10) + 10) % 10; }

int prefix_limit(int L) { return std::min(L, (L + 5) / 2); }
int suffix_limit(int L) { return std::min(L, L - prefix_limit(L) + 4); }

struct TableBuilder {
  const WordSpace& space;
  const RunTable& table;
  bool reversed;
  int limit;
  std::vector<HalfWord>& out;
  std::vector<std::int8_t>& pool;
  std::vector<Crossing> path;

  void walk(const Matrix2& block, int writhe, int pos, int edge_index, int length) {
    HalfWord h;
    h.block = block;
    h.writhe = static_cast<std::int8_t>(wrap10(writhe));
    h.length = static_cast<std::uint8_t>(length);
    h.run_offset = static_cast<std::uint32_t>(pool.size() / 2);
    h.run_count = static_cast<std::uint8_t>(path.size());
    if (!reversed) {
      h.pos_start = static_cast<std::int8_t>(space.weave_only ? space.mobile_start : 0);
      h.pos_end = static_cast<std::int8_t>(pos);
      for (const auto& c : path) {
        pool.push_back(static_cast<std::int8_t>(c.index));
        pool.push_back(static_cast<std::int8_t>(c.exponent));
      }
    } else {
      h.pos_start = static_cast<std::int8_t>(pos);
      h.pos_end = static_cast<std::int8_t>(space.weave_only ? space.mobile_end : 0);
      for (auto it = path.rbegin(); it != path.rend(); ++it) {
        pool.push_back(static_cast<std::int8_t>(it->index));
        pool.push_back(static_cast<std::int8_t>(it->exponent));
      }
    }
    if (!path.empty()) {
      const int near_edge = path.back().index;
      const int far_edge = path.front().index;
      h.first_index = static_cast<std::int8_t>(reversed ? near_edge : far_edge);
      h.last_index = static_cast<std::int8_t>(reversed ? far_edge : near_edge);
    }
    out.push_back(h);

    for (int k = 1; k <= 2; ++k) {
      if (k == edge_index || !space.allows(k, pos)) continue;
      for (int e : kRunExponents) {
        const int cost = std::abs(e);
        if (length + cost > limit) continue;
        const Matrix2 next = reversed ? Matrix2(block * table.block(k, e))
                                      : Matrix2(table.block(k, e) * block);
        path.push_back({k, e});
        walk(next, writhe + e, move_mobile(pos, k, e), k, length + cost);
        path.pop_back();
      }
    }
  }
};

constexpr std::size_t kBytesPerEntry = sizeof(HalfWord) + 96;

}  // namespace

std::size_t MitmIndex::estimate_bytes(const WordSpace& space) {
  WordSpace pre = space;
  pre.max_length = prefix_limit(space.max_length);
  WordSpace suf = space;
  suf.max_length = suffix_limit(space.max_length);
  suf.mobile_start = space.mobile_end;
  const double n = count_nodes(pre) + count_nodes(suf);
  return static_cast<std::size_t>(n * static_cast<double>(kBytesPerEntry));
}

MitmIndex::MitmIndex(const WordSpace& space, TargetMode mode, std::size_t max_memory_bytes,
                     int threads)
    : space_(space), mode_(mode), threads_(threads > 0 ? threads : omp_get_max_threads()) {
  space_.validate();
  const std::size_t need = estimate_bytes(space_);
  if (need > max_memory_bytes) {
    std::ostringstream msg;
    msg << "meet-in-the-middle tables need about " << (need >> 20) << " MiB, limit is "
        << (max_memory_bytes >> 20) << " MiB; lower --max-length or raise the memory limit";
    throw ResourceGuardError(msg.str());
  }
  prefix_max_ = prefix_limit(space_.max_length);
  suffix_max_ = suffix_limit(space_.max_length);
  build_tables();
  build_grid();
}

MitmIndex::MitmIndex(const WordSpace& space, TargetMode mode,
                     const std::vector<std::vector<Crossing>>& prefix_words,
                     const std::vector<std::vector<Crossing>>& suffix_words, int threads)
    : space_(space), mode_(mode), threads_(threads > 0 ? threads : omp_get_max_threads()) {
  space_.validate();
  prefix_max_ = prefix_limit(space_.max_length);
  suffix_max_ = suffix_limit(space_.max_length);
  for (const auto& w : prefix_words) add_half(w, false);
  for (const auto& w : suffix_words) add_half(w, true);
  build_grid();
}

void MitmIndex::add_half(const std::vector<Crossing>& runs, bool suffix) {
  const RunTable& table = run_table();
  HalfWord h;
  h.block = Matrix2::Identity();
  int writhe = 0, length = 0;
  for (const auto& c : runs) {
    if (c.index < 1 || c.index > 2 || c.exponent == 0 || fold_exponent(c.exponent) != c.exponent)
      throw std::invalid_argument("stored half word is not a canonical 3-strand word");
    h.block = table.block(c.index, c.exponent) * h.block;
    writhe += c.exponent;
    length += std::abs(c.exponent);
  }
  if (length > (suffix ? suffix_max_ : prefix_max_))
    throw std::invalid_argument("stored half word exceeds the half length");
  for (std::size_t k = 1; k < runs.size(); ++k)
    if (runs[k].index == runs[k - 1].index)
      throw std::invalid_argument("stored half word is not canonical");
  h.writhe = static_cast<std::int8_t>(wrap10(writhe));
  h.length = static_cast<std::uint8_t>(length);
  h.run_count = static_cast<std::uint8_t>(runs.size());
  if (!runs.empty()) {
    h.first_index = static_cast<std::int8_t>(runs.front().index);
    h.last_index = static_cast<std::int8_t>(runs.back().index);
  }
  if (space_.weave_only) {
    // Replay: prefixes start at mobile_start, suffixes must end at mobile_end.
    int pos = suffix ? space_.mobile_end : space_.mobile_start;
    auto step = [&](const Crossing& c) {
      if (!space_.allows(c.index, pos))
        throw std::invalid_argument("stored half word is not a weave of this net");
      pos = move_mobile(pos, c.index, c.exponent);
    };
    if (suffix) {
      for (auto it = runs.rbegin(); it != runs.rend(); ++it) step(*it);
      h.pos_start = static_cast<std::int8_t>(pos);
      h.pos_end = static_cast<std::int8_t>(space_.mobile_end);
    } else {
      for (const auto& c : runs) step(c);
      h.pos_start = static_cast<std::int8_t>(space_.mobile_start);
      h.pos_end = static_cast<std::int8_t>(pos);
    }
  }
  auto& pool = suffix ? suffix_runs_ : prefix_runs_;
  h.run_offset = static_cast<std::uint32_t>(pool.size() / 2);
  for (const auto& c : runs) {
    pool.push_back(static_cast<std::int8_t>(c.index));
    pool.push_back(static_cast<std::int8_t>(c.exponent));
  }
  (suffix ? suffixes_ : prefixes_).push_back(h);
}

void MitmIndex::build_tables() {
  const RunTable& table = run_table();
  TableBuilder pre{space_, table, false, prefix_max_, prefixes_, prefix_runs_, {}};
  pre.walk(Matrix2::Identity(), 0, space_.weave_only ? space_.mobile_start : 0, 0, 0);
  TableBuilder suf{space_, table, true, suffix_max_, suffixes_, suffix_runs_, {}};
  suf.walk(Matrix2::Identity(), 0, space_.weave_only ? space_.mobile_end : 0, 0, 0);
}

std::uint64_t MitmIndex::key_of(const double* q) const {
  std::uint64_t key = 0;
  for (int i = 0; i < 4; ++i) {
    const auto c = static_cast<std::uint64_t>(std::floor((q[i] + 2.0) / cell_));
    key |= (c & 0xFFFF) << (16 * i);
  }
  return key;
}

void MitmIndex::build_grid() {
  const int classes = mode_ == TargetMode::Full ? 10 : 1;
  const double per_class = std::max(1.0, static_cast<double>(prefixes_.size()) / classes);
  cell_ = std::clamp(std::cbrt(4.0 * std::numbers::pi * std::numbers::pi / per_class), 1e-4, 0.5);

  std::vector<std::vector<std::pair<std::uint64_t, std::uint32_t>>> keyed(classes);
  for (std::uint32_t i = 0; i < prefixes_.size(); ++i) {
    const auto& h = prefixes_[i];
    Quat q;
    int cls = 0;
    if (mode_ == TargetMode::Full) {
      cls = h.writhe;
      const Matrix2 n = h.block / run_table().nc_phase(h.writhe) * class_rotation(cls);
      q = project(n);
    } else {
      q = su2_quat(h.block);
    }
    keyed[cls].push_back({key_of(q.data()), i});
  }
  order_.assign(classes, {});
  grids_.assign(classes, {});
  for (int c = 0; c < classes; ++c) {
    auto& list = keyed[c];
    std::sort(list.begin(), list.end());
    auto& order = order_[c];
    order.reserve(list.size());
    for (std::size_t j = 0; j < list.size(); ++j) {
      order.push_back(list[j].second);
      auto [it, inserted] = grids_[c].try_emplace(
          list[j].first, Cell{static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(j + 1)});
      if (!inserted) it->second.end = static_cast<std::uint32_t>(j + 1);
    }
  }
}

std::vector<Crossing> MitmIndex::prefix_runs(std::size_t i) const {
  const auto& h = prefixes_[i];
  std::vector<Crossing> runs;
  for (std::size_t r = 0; r < h.run_count; ++r)
    runs.push_back({prefix_runs_[2 * (h.run_offset + r)], prefix_runs_[2 * (h.run_offset + r) + 1]});
  return runs;
}

std::vector<Crossing> MitmIndex::suffix_runs(std::size_t i) const {
  const auto& h = suffixes_[i];
  std::vector<Crossing> runs;
  for (std::size_t r = 0; r < h.run_count; ++r)
    runs.push_back({suffix_runs_[2 * (h.run_offset + r)], suffix_runs_[2 * (h.run_offset + r) + 1]});
  return runs;
}

SearchResult MitmIndex::nearest(const GateTarget& target) const {
  if (target.mode != mode_)
    throw std::invalid_argument("meet-in-the-middle index was built for a different target mode");
  const Scorer scorer(target);
  Matrix2 t_block;
  Complex t_nc = 1.0;
  if (mode_ == TargetMode::Full) {
    const auto& m = target.matrix;
    if (std::abs(m(0, 2)) + std::abs(m(1, 2)) + std::abs(m(2, 0)) + std::abs(m(2, 1)) > kExactTol)
      throw std::invalid_argument(
          "meet-in-the-middle needs a target that is block diagonal in total charge");
    t_block = m.topLeftCorner(2, 2);
    t_nc = m(2, 2);
  } else {
    t_block = target.matrix;
  }
  const double theta = det_angle_step();
  const int L = space_.max_length;
  // Radius in quaternion space per unit of epsilon.
  const double radius_scale = mode_ == TargetMode::Full ? 2.0 : 1.0;

  double r0 = cell_;
  CandidateSet merged;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<CandidateSet> found(static_cast<std::size_t>(threads_));

#pragma omp parallel num_threads(threads_)
    {
      const int tid = omp_get_thread_num();
      CandidateSet& local = found[static_cast<std::size_t>(tid)];

      auto probe = [&](const HalfWord& b, std::size_t b_id, const Quat& q, int cls) {
        const double eps_radius = local.empty() ? r0 : std::min(r0, local.best() + 1e-9);
        const double rho = radius_scale * eps_radius;
        const Grid& grid = grids_[static_cast<std::size_t>(cls)];
        const auto& order = order_[static_cast<std::size_t>(cls)];
        if (grid.empty()) return;
        std::array<std::int64_t, 4> lo, hi;
        double box = 1.0;
        for (int i = 0; i < 4; ++i) {
          lo[i] = static_cast<std::int64_t>(std::floor((q[i] - rho + 2.0) / cell_));
          hi[i] = static_cast<std::int64_t>(std::floor((q[i] + rho + 2.0) / cell_));
          lo[i] = std::max<std::int64_t>(lo[i], 0);
          box *= static_cast<double>(hi[i] - lo[i] + 1);
        }
        auto scan = [&](const Cell& cell) {
          for (std::uint32_t j = cell.begin; j < cell.end; ++j) {
            const std::uint32_t a_id = order[j];
            const HalfWord& a = prefixes_[a_id];
            if (a.length + b.length > L) continue;
            if (space_.weave_only && a.pos_end != b.pos_start) continue;
            if (a.last_index != 0 && a.last_index == b.first_index) continue;
            const double eps = scorer.epsilon(Matrix2(b.block * a.block), a.writhe + b.writhe);
            if (eps <= local.best() + CandidateSet::kTieTol && eps <= eps_radius + 1e-9) {
              auto runs = prefix_runs(a_id);
              auto tail = suffix_runs(b_id);
              runs.insert(runs.end(), tail.begin(), tail.end());
              local.offer(eps, runs);
            }
          }
        };
        if (box > static_cast<double>(grid.size())) {
          for (const auto& [key, cell] : grid) scan(cell);
          return;
        }
        for (std::int64_t c0 = lo[0]; c0 <= hi[0]; ++c0)
          for (std::int64_t c1 = lo[1]; c1 <= hi[1]; ++c1)
            for (std::int64_t c2 = lo[2]; c2 <= hi[2]; ++c2)
              for (std::int64_t c3 = lo[3]; c3 <= hi[3]; ++c3) {
                const std::uint64_t key = (static_cast<std::uint64_t>(c0) & 0xFFFF) |
                                          ((static_cast<std::uint64_t>(c1) & 0xFFFF) << 16) |
                                          ((static_cast<std::uint64_t>(c2) & 0xFFFF) << 32) |
                                          ((static_cast<std::uint64_t>(c3) & 0xFFFF) << 48);
                if (auto it = grid.find(key); it != grid.end()) scan(it->second);
              }
      };

#pragma omp for schedule(dynamic, 256)
      for (std::size_t b_id = 0; b_id < suffixes_.size(); ++b_id) {
        const HalfWord& b = suffixes_[b_id];
        // Want U(b) U(a) ~ T, i.e. U(a) ~ U(b)^dagger T.
        const Matrix2 c_block = b.block.adjoint() * t_block;
        if (mode_ == TargetMode::QubitBlockOnly) {
          const Quat q = su2_quat(c_block);
          const Quat neg{-q[0], -q[1], -q[2], -q[3]};
          probe(b, b_id, q, 0);
          probe(b, b_id, neg, 0);
        } else {
          const Complex c_nc = std::conj(run_table().nc_phase(b.writhe)) * t_nc;
          const Matrix2 n = c_block / c_nc;
          const Complex det = n.determinant();
          const double eps_radius = local.empty() ? r0 : std::min(r0, local.best() + 1e-9);
          for (int k = 0; k < 10; ++k) {
            if (std::abs(det - std::polar(1.0, theta * k)) > 4.0 * eps_radius + 1e-6) continue;
            probe(b, b_id, project(n * class_rotation(k)), k);
          }
        }
      }
    }

    for (const auto& f : found) merged.merge(f);
    if (!merged.empty()) break;
    r0 *= 2.0;
  }

  std::ostringstream notes;
  notes << "meet-in-the-middle: " << prefixes_.size() << " prefixes (len<=" << prefix_max_
        << "), " << suffixes_.size() << " suffixes (len<=" << suffix_max_ << "), cell "
        << cell_;
  // The pair count depends on how the suffixes were split across threads, so report the
  // half words instead; output stays identical for any thread count.
  const double halves = static_cast<double>(prefixes_.size() + suffixes_.size());
  return finish_result(merged.winner(), target, halves, merged.size(), notes.str());
}

}  // namespace fibraid

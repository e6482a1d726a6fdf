#include "fibraid/solovay_kitaev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fibraid/metrics.hpp"
#include "fibraid/representation.hpp"

namespace fibraid {

Matrix2 su2_from_quaternion(double w, double x, double y, double z) {
  const Complex i(0.0, 1.0);
  Matrix2 m;
  m << w - i * z, -y - i * x, y - i * x, w + i * z;
  return m;
}

Eigen::Vector4d quaternion_of(const Matrix2& u) {
  return {u(0, 0).real(), -u(0, 1).imag(), -u(0, 1).real(), -u(0, 0).imag()};
}

Matrix2 axis_angle(const Eigen::Vector3d& axis, double angle) {
  const Eigen::Vector3d n = axis.normalized();
  const double s = std::sin(angle / 2);
  return su2_from_quaternion(std::cos(angle / 2), s * n.x(), s * n.y(), s * n.z());
}

Matrix2 strip_phase(const Matrix2& u) { return u / std::sqrt(u.determinant()); }

double rotation_angle(const Matrix2& u) {
  const Eigen::Vector4d q = quaternion_of(u);
  return 2.0 * std::atan2(q.tail<3>().norm(), q[0]);
}

Matrix2 haar_su2(std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + index);
  std::normal_distribution<double> g;
  Eigen::Vector4d q;
  do {
    q = {g(rng), g(rng), g(rng), g(rng)};
  } while (q.norm() < 1e-9);
  q.normalize();
  return su2_from_quaternion(q[0], q[1], q[2], q[3]);
}

namespace {

WordSpace net_space(int base_length, int mobile) {
  WordSpace s{base_length, true, mobile, mobile};
  s.validate();
  return s;
}

}  // namespace

BaseNet::BaseNet(int base_length, const BaseNetOptions& options)
    : base_length_(base_length), mobile_(options.mobile), threads_(options.threads) {
  block_ = std::make_unique<MitmIndex>(net_space(base_length, mobile_), TargetMode::QubitBlockOnly,
                                       options.max_memory_bytes, threads_);
}

BaseNet::BaseNet(int base_length, int mobile, const std::vector<std::vector<Crossing>>& prefixes,
                 const std::vector<std::vector<Crossing>>& suffixes, int threads)
    : base_length_(base_length), mobile_(mobile), threads_(threads) {
  block_ = std::make_unique<MitmIndex>(net_space(base_length, mobile), TargetMode::QubitBlockOnly,
                                       prefixes, suffixes, threads);
}

SearchResult BaseNet::nearest(const GateTarget& target) const {
  if (target.mode == TargetMode::QubitBlockOnly) return block_->nearest(target);
  std::lock_guard lock(*full_mutex_);
  if (!full_) {
    std::vector<std::vector<Crossing>> pre, suf;
    pre.reserve(block_->prefix_count());
    suf.reserve(block_->suffix_count());
    for (std::size_t i = 0; i < block_->prefix_count(); ++i) pre.push_back(block_->prefix_runs(i));
    for (std::size_t i = 0; i < block_->suffix_count(); ++i) suf.push_back(block_->suffix_runs(i));
    full_ = std::make_unique<MitmIndex>(block_->space(), TargetMode::Full, pre, suf, threads_);
  }
  return full_->nearest(target);
}

std::vector<NetEntry> BaseNet::entries(std::size_t limit) const {
  const WordSpace& space = block_->space();
  if (count_words(space) > static_cast<double>(limit))
    throw ResourceGuardError("net has more entries than the requested limit");
  const RunTable& table = run_table();
  std::vector<NetEntry> out;
  std::vector<Crossing> runs;
  auto dfs = [&](auto&& self, const Matrix2& block, int pos, int length, int last) -> void {
    if (space.accepts_end(pos)) out.push_back({BraidWord{3, runs}, strip_phase(block)});
    for (int k = 1; k <= 2; ++k) {
      if (k == last || !space.allows(k, pos)) continue;
      for (int e : kRunExponents) {
        if (length + std::abs(e) > space.max_length) continue;
        runs.push_back({k, e});
        self(self, table.block(k, e) * block, move_mobile(pos, k, e), length + std::abs(e), k);
        runs.pop_back();
      }
    }
  };
  dfs(dfs, Matrix2::Identity(), space.mobile_start, 0, 0);
  return out;
}

double measure_covering_radius(const BaseNet& net, int samples, std::uint64_t seed) {
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Matrix2 r = haar_su2(seed, static_cast<std::uint64_t>(s));
    const GateTarget t = make_target(r, TargetMode::QubitBlockOnly, true, "haar");
    worst = std::max(worst, net.nearest(t).epsilon);
  }
  return worst;
}

BaseNet build_base_net(int base_length, const BaseNetOptions& options) {
  BaseNet net(base_length, options);
  if (options.cover_samples > 0)
    net.set_covering_radius(measure_covering_radius(net, options.cover_samples, options.seed));
  return net;
}

Commutator group_commutator_decompose(const Matrix2& delta) {
  const double theta = rotation_angle(delta);
  if (!(theta < std::numbers::pi / 2))
    throw std::domain_error("group commutator needs a rotation angle below pi/2");
  if (theta < 1e-15) return {Matrix2::Identity(), Matrix2::Identity()};
  // Equal-angle rotations about x and y whose commutator has angle theta.
  const double phi = 2.0 * std::asin(std::sqrt(std::sin(theta / 4)));
  const Matrix2 v = axis_angle(Eigen::Vector3d::UnitX(), phi);
  const Matrix2 w = axis_angle(Eigen::Vector3d::UnitY(), phi);
  const Matrix2 c = v * w * v.adjoint() * w.adjoint();
  // Conjugate so the commutator's axis lands on delta's axis.
  const Eigen::Vector3d m = quaternion_of(c).tail<3>().normalized();
  const Eigen::Vector3d n = quaternion_of(delta).tail<3>().normalized();
  Matrix2 p = Matrix2::Identity();
  const Eigen::Vector3d cross = m.cross(n);
  const double dot = std::clamp(m.dot(n), -1.0, 1.0);
  if (cross.norm() > 1e-14) {
    p = axis_angle(cross, std::atan2(cross.norm(), dot));
  } else if (dot < 0) {
    const Eigen::Vector3d perp = std::abs(m.x()) < 0.9 ? m.cross(Eigen::Vector3d::UnitX())
                                                       : m.cross(Eigen::Vector3d::UnitY());
    p = axis_angle(perp, std::numbers::pi);
  }
  return {p * v * p.adjoint(), p * w * p.adjoint()};
}

namespace {

struct Approx {
  BraidWord word{3, {}};
  Matrix2 block = Matrix2::Identity();
};

class Refiner {
 public:
  explicit Refiner(const BaseNet& net) : net_(net) {}

  Approx base(const GateTarget& target) {
    Approx a;
    a.word = net_.nearest(target).best_word;
    a.block = block_of(a.word);
    return a;
  }

  // SU(2) rotation still missing between the approximation and the target.
  static Matrix2 residual(const GateTarget& target, const Approx& a) {
    if (target.mode == TargetMode::QubitBlockOnly) {
      const Matrix2 t = target.matrix.topLeftCorner(2, 2);
      Matrix2 s = strip_phase(t * a.block.adjoint());
      if (s.trace().real() < 0) s = -s;
      return s;
    }
    // Full target: the commutator leaves |NC> alone, so only the block is corrected,
    // and the square-root branch is the one nearest the block itself.
    const Matrix evaluated = evaluate_matrix(a.word, representation(3));
    const Matrix d = target.matrix * evaluated.adjoint();
    const Matrix2 b = d.topLeftCorner(2, 2);
    Complex root = std::sqrt(b.determinant());
    if (root.real() < 0) root = -root;
    return b / root;
  }

  std::vector<Approx> chain(const GateTarget& target, int depth) {
    std::vector<Approx> out{base(target)};
    for (int k = 1; k <= depth; ++k) {
      const Approx& prev = out.back();
      const Commutator gc = group_commutator_decompose(residual(target, prev));
      const Approx v = approximate(gc.v, k - 1);
      const Approx w = approximate(gc.w, k - 1);
      BraidWord word = concat(concat(concat(concat(prev.word, inverse(w.word)), inverse(v.word)),
                                     w.word),
                              v.word);
      Approx next;
      next.word = free_reduce(word);
      next.block = block_of(next.word);
      out.push_back(std::move(next));
    }
    return out;
  }

 private:
  Approx approximate(const Matrix2& rotation, int depth) {
    const GateTarget t = make_target(rotation, TargetMode::QubitBlockOnly, true, "commutator");
    return chain(t, depth).back();
  }

  static Matrix2 block_of(const BraidWord& w) {
    return evaluate_matrix(w, representation(3)).topLeftCorner(2, 2);
  }

  const BaseNet& net_;
};

}  // namespace

SkResult sk_refine(const GateTarget& target, int depth, const BaseNet& net) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  if (target.matrix.rows() != (target.mode == TargetMode::QubitBlockOnly ? 2 : 3))
    throw std::invalid_argument("target must be a 2x2 block or a 3x3 unitary");
  if (target.mode == TargetMode::Full &&
      (std::abs(target.matrix(0, 2)) + std::abs(target.matrix(1, 2)) +
       std::abs(target.matrix(2, 0)) + std::abs(target.matrix(2, 1))) > 1e-12)
    throw std::invalid_argument("full target must preserve the qubit block");
  Refiner refiner(net);
  const auto chain = refiner.chain(target, depth);
  SkResult out;
  const Representation& rep = representation(3);
  for (int k = 0; k <= depth; ++k) {
    const auto& a = chain[static_cast<std::size_t>(k)];
    out.trace.push_back({k, target_distance(evaluate_matrix(a.word, rep), target),
                         static_cast<std::size_t>(a.word.length())});
  }
  out.word = chain.back().word;
  out.epsilon = out.trace.back().epsilon;
  return out;
}

ScalingFit fit_length_exponent(const std::vector<SkLevel>& trace) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& l : trace) {
    if (l.epsilon <= 0 || l.epsilon >= 1 || l.length == 0) continue;
    const double x = std::log(-std::log(l.epsilon));
    const double y = std::log(static_cast<double>(l.length));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) throw std::invalid_argument("need two levels with 0 < eps < 1 to fit");
  const double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-300) throw std::invalid_argument("degenerate fit");
  ScalingFit f;
  f.exponent = (n * sxy - sx * sy) / denom;
  f.intercept = (sy - f.exponent * sx) / n;
  return f;
}

}  // namespace fibraid

#include "fibraid/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "fibraid/braid_word.hpp"
#include "fibraid/metrics.hpp"
#include "fibraid/representation.hpp"
#include "fibraid/search.hpp"
#include "fibraid/solovay_kitaev.hpp"
#include "fibraid/two_qubit.hpp"

namespace fibraid {

namespace {

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1), ex(-6, 6);
  BraidWord w{n, {}};
  for (int i = 0; i < len; ++i) w.crossings.push_back({gen(rng), ex(rng)});
  return w;
}

}  // namespace

BraidWord random_return_weave(std::mt19937& rng, int runs) {
  std::uniform_int_distribution<std::size_t> pick(0, kRunExponents.size() - 1);
  std::bernoulli_distribution coin;
  BraidWord w{3, {}};
  int pos = 1;
  for (int r = 0; r < runs; ++r) {
    int k = pos == 1 ? 1 : (pos == 3 ? 2 : (coin(rng) ? 1 : 2));
    const int e = kRunExponents[pick(rng)];
    w.crossings.push_back({k, e});
    pos = move_mobile(pos, k, e);
  }
  if (pos == 3) {
    w.crossings.push_back({2, 1});
    pos = 2;
  }
  if (pos == 2) w.crossings.push_back({1, 1});
  return w;
}

std::vector<PropertyResult> run_invariant_suite(unsigned seed, int threads) {
  std::vector<PropertyResult> out;
  auto add = [&](std::string name, bool ok, std::string detail) {
    out.push_back({std::move(name), ok, std::move(detail)});
  };
  std::mt19937 rng(seed);

  {
    bool ok = true;
    for (int n = 1; n <= 16; ++n)
      ok = ok && FusionBasis::enumerate(n).dim() == fibonacci(n + 1);
    const auto b6 = FusionBasis::enumerate(6);
    ok = ok && b6.block(QSpin::Zero).size() == 5 && b6.block(QSpin::One).size() == 8;
    add("dimension law n=1..16, 5+8 split at n=6", ok, "");
  }

  double unit = 0, yb = 0, far = 0, order = 0, leak = 0;
  for (int n = 3; n <= 6; ++n) {
    const auto& rep = representation(n);
    const Matrix id = rep.identity();
    for (int i = 1; i < n; ++i) {
      const auto& g = rep.generator(i);
      unit = std::max(unit, g.unitarity_defect());
      leak = std::max(leak, g.off_block_magnitude());
      Matrix p = id;
      for (int k = 0; k < 10; ++k) p = g.entries * p;
      order = std::max(order, distance(p, id));
      if (i + 1 < n) {
        const Matrix& a = g.entries;
        const Matrix& b = rep.generator(i + 1).entries;
        yb = std::max(yb, distance(a * b * a, b * a * b));
      }
      for (int j = i + 2; j < n; ++j) {
        const Matrix& a = g.entries;
        const Matrix& b = rep.generator(j).entries;
        far = std::max(far, distance(a * b, b * a));
      }
    }
  }
  add("generators unitary", unit < 1e-12, fmt(unit));
  add("Yang-Baxter relation", yb < 1e-12, fmt(yb));
  add("far commutation", far < 1e-12, fmt(far));
  add("sigma^10 = I", order < 1e-12, fmt(order));
  add("charge blocks preserved", leak < 1e-12, fmt(leak));

  {
    const double v = std::abs(representation(3).generator(2).entries(0, 0));
    add("|sigma2[0,0]| = tau", std::abs(v - ModelConstants::tau()) < 1e-12,
        fmt(std::abs(v - ModelConstants::tau())));
  }

  {
    double worst = 0;
    bool text_ok = true;
    for (int t = 0; t < 300; ++t) {
      const int n = 3 + t % 4;
      const BraidWord w = random_word(rng, n, 1 + t % 12);
      const BraidWord c = free_reduce(w);
      text_ok = text_ok && parse(format(c), n) == c && is_canonical(c);
      worst = std::max(worst, distance(evaluate(w, n).entries, evaluate(c, n).entries));
    }
    add("format/parse round trip", text_ok, "");
    add("canonicalization preserves the unitary", worst < 1e-12, fmt(worst));
  }

  {
    SearchOptions o;
    o.max_length = 8;
    o.parallel_shards = threads;
    double worst = 0;
    bool same_word = true;
    for (int t = 0; t < 4; ++t) {
      const GateTarget tg =
          make_target(haar_su2(seed, static_cast<std::uint64_t>(t)), TargetMode::QubitBlockOnly,
                      true, "haar");
      const auto a = exhaustive_search_serial(tg, o);
      const auto b = exhaustive_search(tg, o);
      const auto c = mitm_search(tg, o);
      worst = std::max({worst, std::abs(a.epsilon - b.epsilon), std::abs(a.epsilon - c.epsilon)});
      same_word = same_word && a.best_word == b.best_word && a.best_word == c.best_word;
    }
    add("serial, parallel and meet-in-the-middle searches agree", worst < 1e-12 && same_word,
        fmt(worst));
  }

  {
    double worst = 0;
    for (int t = 0; t < 10; ++t) {
      const Eigen::Vector3d axis = Eigen::Vector3d::Random();
      const Matrix2 d = axis_angle(axis, 0.05 + 0.1 * t);
      const auto gc = group_commutator_decompose(d);
      worst = std::max(worst, distance(gc.v * gc.w * gc.v.adjoint() * gc.w.adjoint(), d));
    }
    add("group commutator reproduces its input", worst < 1e-10, fmt(worst));
  }

  {
    // Lifted weaves act trivially when the pair has q-spin 0.
    double worst = 0;
    const Matrix p0 = pair_charge_projector(0, 2);
    for (int t = 0; t < 5; ++t) {
      const BraidWord w = random_return_weave(rng, 8);
      const Matrix u = evaluate_matrix(lift_weave(w, 2, 1), representation(6));
      worst = std::max(worst, distance(u * p0, p0));
    }
    add("q-spin-0 pair passes through unnoticed", worst < 1e-12, fmt(worst));
  }

  {
    const Matrix ideal = effective_braiding_target(1);
    const CompositeBraid c = assemble_controlled_phase(BraidWord{3, {{1, 1}, {2, 2}, {1, -1}}}, ideal, 0.0);
    const Matrix u = ideal_composite(c);
    const auto emb = computational_embedding(QubitLayout::two_qubits());
    double worst = leakage(u, emb);
    for (std::size_t b = 0; b < emb.blocks.size(); ++b)
      worst = std::max(worst, phase_distance(computational_action(u, emb, b),
                                             controlled_phase_gate(1)).epsilon);
    add("ideal controlled rotation is exact and leakage-free", worst < 1e-10, fmt(worst));
  }

  {
    Matrix x = Matrix::Zero(3, 3);
    x(0, 1) = x(1, 0) = x(2, 2) = 1.0;
    const BraidWord inj{3, {{1, 1}, {2, 1}}};
    const BraidWord flip{3, {{1, 2}}};
    const CompositeBraid c = assemble_cnot(inj, Matrix::Identity(3, 3), 0.0, flip, x, 0.0);
    const Matrix u = ideal_composite(c);
    const auto emb = computational_embedding(QubitLayout::two_qubits());
    double worst = leakage(u, emb);
    double square = 0;
    for (std::size_t b = 0; b < emb.blocks.size(); ++b) {
      const Matrix a = computational_action(u, emb, b);
      worst = std::max(worst, aligned_distance(a, cnot_gate()).first);
      square = std::max(square, distance(a * a, Matrix::Identity(4, 4)));
    }
    add("ideal CNOT exact up to phases, leakage-free", worst < 1e-10, fmt(worst));
    add("ideal CNOT squared is identity", square < 1e-10, fmt(square));
  }
  return out;
}

}  // namespace fibraid

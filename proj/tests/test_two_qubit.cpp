#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fibraid/metrics.hpp"
#include "fibraid/representation.hpp"
#include "fibraid/search.hpp"
#include "fibraid/solovay_kitaev.hpp"
#include "fibraid/two_qubit.hpp"
#include "fibraid/verify.hpp"

using namespace fibraid;

namespace {

const double kPi = std::numbers::pi;

Matrix rho6(const BraidWord& w) { return evaluate_matrix(w, representation(6)); }
Matrix rho3(const BraidWord& w) { return evaluate_matrix(w, representation(3)); }

const QubitEmbedding& embedding() {
  static const QubitEmbedding e = computational_embedding(QubitLayout::two_qubits());
  return e;
}

// Controlled phase written directly from the exchange phases.
Matrix cphase_oracle(int m) {
  Matrix g = Matrix::Identity(4, 4);
  g(2, 2) = std::polar(1.0, -8 * kPi * m / 5);
  g(3, 3) = std::polar(1.0, 6 * kPi * m / 5);
  return g;
}

// Random weave of the pair (mobile at `start`) returning to `start` or ending at `end`.
BraidWord random_weave(std::mt19937& rng, int start, int end, int runs) {
  for (;;) {
    std::vector<Crossing> cs;
    int pos = start;
    std::uniform_int_distribution<int> ex(-4, 5);
    for (int r = 0; r < runs; ++r) {
      int k = pos == 2 ? 1 + static_cast<int>(rng() % 2) : (pos == 1 ? 1 : 2);
      if (!cs.empty() && cs.back().index == k) k = 3 - k;
      if (pos != k && pos != k + 1) continue;
      int e = 0;
      while (e == 0) e = ex(rng);
      cs.push_back({k, e});
      if (e % 2 != 0) pos = pos == k ? k + 1 : k;
    }
    if (pos == end) return {3, cs};
  }
}

SearchResult searched(const GateTarget& t, int len, int start, int end) {
  SearchOptions o;
  o.max_length = len;
  o.weave_only = true;
  o.mobile_start = start;
  o.mobile_end = end;
  return mitm_search(t, o);
}

}  // namespace

TEST(Lift, SmallWordsLiftAsExpected) {
  EXPECT_TRUE(lift_effective(BraidWord{3, {}}, 1, 1).empty());
  EXPECT_EQ(format(lift_effective(parse("s1", 3), 1, 1)), "s2 s1");
  EXPECT_EQ(format(lift_effective(parse("s1^-1", 3), 1, 2)), "s1^-1 s2^-1");
  EXPECT_EQ(format(lift_effective(parse("s2", 3), 1, 1)), "s3");
  EXPECT_EQ(lift_effective(parse("s1^3", 3), 2, 1).length(), 6);
  EXPECT_THROW(lift_effective(parse("s1", 3), 4, 1), std::invalid_argument);
  EXPECT_THROW(lift_weave(parse("s2", 3), 2, 1), std::invalid_argument);
}

TEST(Lift, LiftedBraidsKeepBraidRelations) {
  // s1 s2 s1 = s2 s1 s2 on the triple survives lifting for every pair position.
  for (int mobile = 1; mobile <= 3; ++mobile) {
    const Matrix a = rho6(lift_effective(parse("s1 s2 s1", 3), 2, mobile));
    const Matrix b = rho6(lift_effective(parse("s2 s1 s2", 3), 2, mobile));
    EXPECT_LT(distance(a, b), 1e-11) << "mobile=" << mobile;
  }
}

TEST(Lift, PairInVacuumIsInvisibleToReturningWeaves) {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const int start = 1 + t % 3;
    const BraidWord w = random_weave(rng, start, start, 2 + t % 5);
    const int pair_pos = 2 + start - 1;
    const Matrix p0 = pair_charge_projector(0, pair_pos);
    const Matrix u = rho6(lift_weave(w, 2, start));
    EXPECT_LT(distance(u * p0, p0), 1e-10) << format(w);
  }
}

TEST(Lift, ChargedPairBehavesAsOneAnyon) {
  std::mt19937 rng(8);
  for (int t = 0; t < 20; ++t) {
    const int start = 1 + t % 3;
    const int end = t % 2 == 0 ? start : (start == 2 ? 2 : 4 - start);
    const BraidWord w = random_weave(rng, start, end, 2 + t % 4);
    const Matrix p1 = pair_charge_projector(1, 2 + start - 1);
    const Matrix u = rho6(lift_weave(w, 2, start));
    const Matrix lifted = lift_ideal(rho3(w), 2, start, end);
    EXPECT_LT(distance(u * p1, lifted * p1), 1e-10) << format(w);
  }
}

TEST(Lift, ProjectorsAreComplementary) {
  for (int pos = 1; pos <= 5; ++pos) {
    const Matrix p0 = pair_charge_projector(0, pos), p1 = pair_charge_projector(1, pos);
    EXPECT_LT(distance(p0 + p1, Matrix::Identity(13, 13)), 1e-12);
    EXPECT_LT(operator_norm(p0 * p1), 1e-12);
    EXPECT_LT(distance(p0 * p0, p0), 1e-12);
  }
}

TEST(Leakage, IdentityAndBlockDiagonalMapsDoNotLeak) {
  EXPECT_LT(leakage(Matrix::Identity(13, 13), embedding()), 1e-14);
  // Braiding within each qubit's triplet never leaks.
  EXPECT_LT(leakage(rho6(parse("s1 s2^3 s4^-2 s5", 6)), embedding()), 1e-12);
  // A crossing between the triplets does.
  EXPECT_GT(leakage(rho6(parse("s3", 6)), embedding()), 1e-3);
}

TEST(Alignment, RecoversKnownPhases) {
  Matrix d = Matrix::Zero(4, 4);
  const double glob = 0.4, pc = -1.1, pt = 2.0;
  for (int c = 0; c < 2; ++c)
    for (int t = 0; t < 2; ++t)
      d(2 * c + t, 2 * c + t) = std::polar(1.0, glob + c * pc + t * pt);
  const Matrix cz = cphase_oracle(1);
  const auto [eps, ph] = aligned_distance(d * cz, cz);
  EXPECT_LT(eps, 1e-7);
  EXPECT_NEAR(std::remainder(ph.control - pc, 2 * kPi), 0.0, 1e-6);
  EXPECT_NEAR(std::remainder(ph.target - pt, 2 * kPi), 0.0, 1e-6);
  EXPECT_GT(aligned_distance(cnot_gate(), Matrix::Identity(4, 4)).first, 0.5);
}

TEST(ControlledPhase, GateMatchesExchangePhases) {
  for (int m = -3; m <= 3; ++m) EXPECT_LT(distance(controlled_phase_gate(m), cphase_oracle(m)), 1e-12);
  // Relative phase between the |1 t> rows: R1^2 / R0^2.
  const Matrix g = controlled_phase_gate(1);
  EXPECT_NEAR(std::arg(g(3, 3) / g(2, 2)), std::remainder(14 * kPi / 5, 2 * kPi), 1e-12);
}

TEST(ControlledPhase, ExactLimitIsTheControlledGate) {
  for (int m : {1, 2, -1}) {
    const SearchResult w = searched(make_target(effective_braiding_target(m), TargetMode::Full,
                                                true, "eff"),
                                    10, 1, 1);
    const CompositeBraid c = assemble_controlled_phase(w.best_word, effective_braiding_target(m), 0);
    const Matrix ideal = ideal_composite(c);
    EXPECT_LT(leakage(ideal, embedding()), 1e-12);
    for (std::size_t b = 0; b < 2; ++b)
      EXPECT_LT(aligned_distance(computational_action(ideal, embedding(), b), cphase_oracle(m)).first,
                1e-7)
          << "m=" << m << " block " << b;
  }
}

TEST(ControlledPhase, FoundWeaveErrorsStayWithinStageBounds) {
  const auto t = make_target(effective_braiding_target(1), TargetMode::Full, true, "eff");
  for (int len : {12, 20}) {
    const SearchResult w = searched(t, len, 1, 1);
    const CompiledGate g = compile_controlled_phase(1, w);
    const GateReport& r = g.report;
    EXPECT_LE(r.leakage, w.epsilon + 1e-9);
    EXPECT_LE(r.composite_error, w.epsilon + 1e-9);
    for (int b = 0; b < 2; ++b) EXPECT_LE(r.eps_block[b], 3 * w.epsilon + 1e-9);
    EXPECT_EQ(r.total_length, g.braid.flattened.length());
    EXPECT_EQ(r.stage_lengths.size(), 3u);
    EXPECT_TRUE(r.warning.empty());
  }
  EXPECT_FALSE(compile_controlled_phase(5, searched(make_target(effective_braiding_target(5),
                                                                TargetMode::Full, true, "e"),
                                                    6, 1, 1))
                   .report.warning.empty());
}

TEST(ControlledPhase, ReportJsonHasAllFields) {
  const auto t = make_target(effective_braiding_target(1), TargetMode::Full, true, "eff");
  const auto j = compile_controlled_phase(1, searched(t, 8, 1, 1)).report.to_json();
  for (const char* key : {"target", "eps_block0", "eps_block1", "raw_eps_block0", "raw_eps_block1",
                          "leakage", "composite_error", "stage_lengths", "total_length", "phases",
                          "warning"})
    EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Cnot, ExactLimitIsCnotAndSquaresToIdentity) {
  SearchOptions o;
  o.max_length = 10;
  const SearchResult inj = find_injection_weave(o);
  const SearchResult nw = find_not_weave(o);
  Matrix x = Matrix::Zero(3, 3);
  x(0, 1) = x(1, 0) = 1;
  x(2, 2) = 1;
  const CompositeBraid c =
      assemble_cnot(inj.best_word, Matrix::Identity(3, 3), 0, nw.best_word, x, 0);
  const Matrix ideal = ideal_composite(c);
  EXPECT_LT(leakage(ideal, embedding()), 1e-12);
  for (std::size_t b = 0; b < 2; ++b) {
    EXPECT_LT(aligned_distance(computational_action(ideal, embedding(), b), cnot_gate()).first, 1e-7);
    EXPECT_LT(aligned_distance(computational_action(ideal * ideal, embedding(), b),
                               Matrix::Identity(4, 4))
                  .first,
              1e-7);
  }
}

TEST(Cnot, CompositeErrorIsBoundedByStageErrors) {
  SearchOptions o;
  o.max_length = 16;
  const SearchResult inj = find_injection_weave(o);
  const SearchResult nw = find_not_weave(o);
  const CompiledGate g = compile_cnot(inj, nw);
  double sum = 0;
  for (const auto& s : g.braid.stages) sum += s.epsilon;
  EXPECT_NEAR(sum, 2 * inj.epsilon + nw.epsilon, 1e-12);
  EXPECT_LE(g.report.composite_error, sum + 1e-9);
  EXPECT_LE(g.report.leakage, g.report.composite_error + 1e-9);
  EXPECT_EQ(g.braid.stages.size(), 5u);
  EXPECT_EQ(g.report.total_length, 2 * 2 + 2 * 2 * inj.best_word.length() +
                                        2 * nw.best_word.length());
  EXPECT_LT(distance(rho6(g.braid.flattened), [&] {
              Matrix u = Matrix::Identity(13, 13);
              for (const auto& s : g.braid.stages) u = rho6(s.lifted) * u;
              return u;
            }()),
            1e-10);
}

TEST(Cnot, StagesMustConnect) {
  CompositeBraid c;
  Stage s;
  s.effective = parse("s1", 3);
  s.triple_start = 1;
  s.mobile_start = 1;
  s.mobile_end = 2;
  s.lifted = lift_effective(s.effective, 1, 1);
  add_stage(c, s);
  EXPECT_THROW(add_stage(c, s), std::invalid_argument);
  SearchOptions o;
  o.max_length = 8;
  const SearchResult inj = find_injection_weave(o);
  EXPECT_THROW(assemble_controlled_phase(inj.best_word, Matrix::Identity(3, 3), 0),
               std::invalid_argument);
}

TEST(ControlledPhase, RefinedWeavesKeepLeakageBelowWeaveError) {
  BaseNetOptions bo;
  bo.mobile = 1;
  bo.cover_samples = 0;
  const BaseNet net = build_base_net(18, bo);
  const auto t = make_target(effective_braiding_target(1), TargetMode::Full, true, "eff");
  for (int depth : {0, 1}) {
    const SkResult sk = sk_refine(t, depth, net);
    const SearchResult w = finish_result(sk.word.crossings, t, 0, 0, "");
    const CompiledGate g = compile_controlled_phase(1, w);
    EXPECT_LE(g.report.leakage, w.epsilon + 1e-9) << "depth " << depth;
  }
}

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fibraid/braid_word.hpp"
#include "fibraid/fusion_basis.hpp"
#include "fibraid/search.hpp"

namespace fibraid {

/// Lifts a 3-object braid in which one object is the control pair to a 6-strand word.
///
/// Object j of the triple sits at strands triple_start + j - 1, shifted by one for objects
/// right of the pair. One half-turn of the pair past a static strand becomes two
/// generators: pair on the left at (a, a+1) with the strand at a+2 gives
/// s_{a+1}^s s_a^s (time order), pair on the right gives s_a^s s_{a+1}^s.
/// Crossings between two static objects lift to a single generator.
/// Throws std::invalid_argument when the triple does not fit in n strands.
BraidWord lift_effective(const BraidWord& effective, int triple_start, int mobile_start,
                         int n = 6);

/// lift_effective for a word that must be a weave of the pair starting at mobile_start.
BraidWord lift_weave(const BraidWord& weave, int triple_start, int mobile_start, int n = 6);

struct Stage {
  std::string label;
  BraidWord effective{3, {}};
  int triple_start = 1;
  int mobile_start = 1;
  int mobile_end = 1;
  BraidWord lifted{6, {}};
  /// Ideal 3x3 action of the stage, including the weave's optimal phase; absent for
  /// stages that are exact braids (the pair stepping past a control strand).
  std::optional<Matrix> ideal;
  double epsilon = 0.0;
};

struct CompositeBraid {
  std::vector<Stage> stages;
  BraidWord flattened{6, {}};
};

/// Appends a stage; throws std::invalid_argument if its pair position does not continue
/// from the previous stage.
void add_stage(CompositeBraid& c, Stage s);

/// Unitary of the composite with each weave replaced by its ideal action: identity-like
/// transport when the pair has q-spin 0, the lifted ideal 3x3 map when it has q-spin 1.
Matrix ideal_composite(const CompositeBraid& c);

/// Operator that lifts an arbitrary 3x3 map of the triple (pair at mobile_start) to the
/// pair-q-spin-1 sector, for a stage ending with the pair at mobile_end.
Matrix lift_ideal(const Matrix& effective, int triple_start, int mobile_start, int mobile_end);

/// Projector onto pair q-spin c (0 or 1) with the pair at strands (pos, pos+1).
Matrix pair_charge_projector(int c, int pos);

/// Largest computational-to-noncomputational amplitude over the charge blocks
/// (operator norm of that off-diagonal block). U is in the chain basis.
double leakage(const Matrix& u, const QubitEmbedding& embedding);

/// 4x4 action on the computational states of one charge block, ordered |c t>.
Matrix computational_action(const Matrix& u, const QubitEmbedding& embedding, std::size_t block);

struct PhaseAlignment {
  double global = 0.0;
  double control = 0.0;  // phase on control |1>
  double target = 0.0;   // phase on target |1>
};

struct GateReport {
  std::string target;
  std::array<double, 2> eps_block{};      // phase aligned, indexed by total charge
  std::array<double, 2> raw_eps_block{};  // global phase only
  std::array<PhaseAlignment, 2> phases{};
  double leakage = 0.0;
  /// ||U - U_ideal|| over the whole space, U_ideal from ideal_composite.
  double composite_error = 0.0;
  std::vector<int> stage_lengths;
  int total_length = 0;
  std::string warning;

  nlohmann::json to_json() const;
};

struct CompiledGate {
  CompositeBraid braid;
  GateReport report;
};

/// min over (global, control, target) diagonal phases of ||A - D G||, and the phases.
std::pair<double, PhaseAlignment> aligned_distance(const Matrix& action, const Matrix& gate);

/// Fills a report comparing the composite's computational action with a 4x4 gate.
GateReport analyze(const CompositeBraid& c, const Matrix& gate, const std::string& name);

/// Ideal controlled gate diag(1, 1, sigma^{2m}) on |c t>.
Matrix controlled_phase_gate(int m);
Matrix cnot_gate();

/// Pair past control strand 3, effective weave through target strands 4 and 5, back.
/// The weave must start and end with the pair at effective position 1.
CompiledGate compile_controlled_phase(int m, const SearchResult& effective_weave);

/// Pair past strand 3, injection (pair 1 -> 3 over strands 4, 5), NOT weave with the pair
/// between strands 5 and 6, ejection (inverse injection), back past strand 3.
CompiledGate compile_cnot(const SearchResult& injection_weave, const SearchResult& not_weave);

/// Same assembly with the given 3x3 maps in place of both weaves' ideals; used to check
/// the constructions in the exact limit.
CompositeBraid assemble_cnot(const BraidWord& injection, const Matrix& injection_ideal,
                             double injection_eps, const BraidWord& not_word,
                             const Matrix& not_ideal, double not_eps);
CompositeBraid assemble_controlled_phase(const BraidWord& weave, const Matrix& ideal, double eps);

}  // namespace fibraid

#include "fibraid/two_qubit.hpp"

#include <gsl/gsl_multimin.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "fibraid/metrics.hpp"
#include "fibraid/representation.hpp"
#include "fibraid/weave.hpp"

namespace fibraid {

namespace {

int object_strand(int j, int triple_start, int pos) {
  return triple_start + j - 1 + (j > pos ? 1 : 0);
}

Matrix rho6(const BraidWord& w) { return evaluate_matrix(w, representation(6)); }
Matrix rho3(const BraidWord& w) { return evaluate_matrix(w, representation(3)); }

BraidWord raw_concat(BraidWord a, const BraidWord& b) {
  a.crossings.insert(a.crossings.end(), b.crossings.begin(), b.crossings.end());
  return a;
}

// Simplest weave carrying the pair from `from` to `to` inside a triple.
BraidWord transport_word(int from, int to) {
  BraidWord w{3, {}};
  for (int p = from; p < to; ++p) w.crossings.push_back({p, 1});
  for (int p = from; p > to; --p) w.crossings.push_back({p - 1, -1});
  return w;
}

// Effective words returning the pair to `pos` whose 3x3 matrices span the block algebra.
struct Spanning {
  std::vector<BraidWord> words;
  Eigen::MatrixXcd basis;  // columns: vectorized rho3 of each word
};

const Spanning& spanning_words(int pos) {
  static std::array<Spanning, 3> cache = [] {
    std::array<Spanning, 3> out;
    for (int p = 1; p <= 3; ++p) {
      Spanning& s = out[static_cast<std::size_t>(p - 1)];
      std::vector<BraidWord> pool{BraidWord{3, {}}};
      for (int len = 1; len <= 3 && s.words.size() < 5; ++len) {
        std::vector<BraidWord> next;
        for (const auto& w : pool)
          for (int k = 1; k <= 2; ++k)
            for (int e : {1, -1, 2}) {
              if (!w.crossings.empty() && w.crossings.back().index == k) continue;
              BraidWord x = w;
              x.crossings.push_back({k, e});
              next.push_back(x);
            }
        pool.insert(pool.end(), next.begin(), next.end());
      }
      Eigen::MatrixXcd cols(9, 0);
      for (const auto& w : pool) {
        int pos_now = p;
        for (const auto& c : w.crossings) pos_now = move_mobile(pos_now, c.index, c.exponent);
        if (pos_now != p) continue;
        const Matrix m = rho3(w);
        Eigen::MatrixXcd trial(9, cols.cols() + 1);
        trial << cols, Eigen::Map<const Eigen::VectorXcd>(m.data(), 9);
        Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(trial);
        qr.setThreshold(1e-9);
        if (qr.rank() == trial.cols()) {
          cols = trial;
          s.words.push_back(w);
          if (s.words.size() == 5) break;
        }
      }
      if (s.words.size() != 5) throw std::logic_error("spanning set for the triple not found");
      s.basis = cols;
    }
    return out;
  }();
  return cache[static_cast<std::size_t>(pos - 1)];
}

}  // namespace

BraidWord lift_effective(const BraidWord& effective, int triple_start, int mobile_start, int n) {
  if (effective.n_strands != 3) throw std::invalid_argument("effective word must have 3 strands");
  if (mobile_start < 1 || mobile_start > 3) throw std::invalid_argument("pair position out of range");
  if (triple_start < 1 || triple_start + 3 > n)
    throw std::invalid_argument("triple does not fit in " + std::to_string(n) + " strands");
  BraidWord out{n, {}};
  int pos = mobile_start;
  for (const auto& c : effective.crossings) {
    const int k = c.index;
    const int s = c.exponent > 0 ? 1 : -1;
    if (pos != k && pos != k + 1) {
      out.crossings.push_back({object_strand(k, triple_start, pos), c.exponent});
      continue;
    }
    for (int step = 0; step < std::abs(c.exponent); ++step) {
      const int a = triple_start + k - 1;
      if (pos == k) {
        out.crossings.push_back({a + 1, s});
        out.crossings.push_back({a, s});
        pos = k + 1;
      } else {
        out.crossings.push_back({a, s});
        out.crossings.push_back({a + 1, s});
        pos = k;
      }
    }
  }
  return out;
}

BraidWord lift_weave(const BraidWord& weave, int triple_start, int mobile_start, int n) {
  if (!classify_weave(weave, mobile_start))
    throw std::invalid_argument("not a weave of the pair starting at position " +
                                std::to_string(mobile_start));
  return lift_effective(weave, triple_start, mobile_start, n);
}

Matrix pair_charge_projector(int c, int pos) {
  const auto& basis = representation(6).basis();
  const auto n = static_cast<Eigen::Index>(basis.dim());
  Matrix p = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    if (to_int(basis.paths()[static_cast<std::size_t>(i)].labels[0]) == c) p(i, i) = 1.0;
  if (pos == 1) return p;
  BraidWord carry{6, {}};
  for (int j = 1; j < pos; ++j) {
    carry.crossings.push_back({j + 1, 1});
    carry.crossings.push_back({j, 1});
  }
  const Matrix b = rho6(carry);
  return b * p * b.adjoint();
}

Matrix lift_ideal(const Matrix& effective, int triple_start, int mobile_start, int mobile_end) {
  const BraidWord ref = transport_word(mobile_start, mobile_end);
  // Split M = rho3(ref) * R with R a return-to-start map, then expand R on spanning words.
  const Matrix r = rho3(ref).adjoint() * effective;
  const Spanning& span = spanning_words(mobile_start);
  const Eigen::VectorXcd coef =
      span.basis.colPivHouseholderQr().solve(Eigen::Map<const Eigen::VectorXcd>(r.data(), 9));
  const Eigen::VectorXcd back = span.basis * coef;
  if ((back - Eigen::Map<const Eigen::VectorXcd>(r.data(), 9)).norm() > 1e-9)
    throw std::invalid_argument("ideal map is not in the span of the 3-object braid algebra");
  Matrix sum = Matrix::Zero(13, 13);
  for (std::size_t j = 0; j < span.words.size(); ++j)
    sum += coef[static_cast<Eigen::Index>(j)] *
           rho6(lift_effective(span.words[j], triple_start, mobile_start));
  return rho6(lift_effective(ref, triple_start, mobile_start)) * sum;
}

void add_stage(CompositeBraid& c, Stage s) {
  if (!c.stages.empty()) {
    const Stage& prev = c.stages.back();
    const int prev_pair = prev.triple_start + prev.mobile_end - 1;
    const int pair = s.triple_start + s.mobile_start - 1;
    if (prev_pair != pair)
      throw std::invalid_argument("stage '" + s.label + "' starts with the pair at strand " +
                                  std::to_string(pair) + " but '" + prev.label + "' left it at " +
                                  std::to_string(prev_pair));
  }
  c.flattened = raw_concat(c.flattened, s.lifted);
  c.stages.push_back(std::move(s));
}

Matrix ideal_composite(const CompositeBraid& c) {
  Matrix u = Matrix::Identity(13, 13);
  for (const auto& s : c.stages) {
    Matrix stage;
    if (!s.ideal) {
      stage = rho6(s.lifted);
    } else {
      const int pair = s.triple_start + s.mobile_start - 1;
      const Matrix transport =
          rho6(lift_effective(transport_word(s.mobile_start, s.mobile_end), s.triple_start,
                              s.mobile_start));
      stage = transport * pair_charge_projector(0, pair) +
              lift_ideal(*s.ideal, s.triple_start, s.mobile_start, s.mobile_end) *
                  pair_charge_projector(1, pair);
    }
    u = stage * u;
  }
  return u;
}

double leakage(const Matrix& u, const QubitEmbedding& e) {
  const Matrix a = e.to_layout_basis * u * e.to_layout_basis.adjoint();
  double worst = 0.0;
  for (std::size_t b = 0; b < e.blocks.size(); ++b) {
    const auto& blk = e.blocks[b];
    const auto& comp = e.computational[b];
    std::vector<std::size_t> nc;
    for (std::size_t i : e.noncomputational)
      if (blk.contains(i)) nc.push_back(i);
    if (nc.empty() || comp.empty()) continue;
    Matrix m(static_cast<Eigen::Index>(nc.size()), static_cast<Eigen::Index>(comp.size()));
    for (std::size_t r = 0; r < nc.size(); ++r)
      for (std::size_t col = 0; col < comp.size(); ++col)
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) =
            a(static_cast<Eigen::Index>(nc[r]), static_cast<Eigen::Index>(comp[col]));
    worst = std::max(worst, operator_norm(m));
  }
  return worst;
}

Matrix computational_action(const Matrix& u, const QubitEmbedding& e, std::size_t block) {
  const Matrix a = e.to_layout_basis * u * e.to_layout_basis.adjoint();
  const auto& comp = e.computational.at(block);
  const auto n = static_cast<Eigen::Index>(comp.size());
  Matrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      m(r, c) = a(static_cast<Eigen::Index>(comp[static_cast<std::size_t>(r)]),
                  static_cast<Eigen::Index>(comp[static_cast<std::size_t>(c)]));
  return m;
}

namespace {

struct AlignProblem {
  const Matrix* action;
  const Matrix* gate;
};

Matrix phase_diag(double g, double a, double b) {
  Matrix d = Matrix::Zero(4, 4);
  d(0, 0) = std::polar(1.0, g);
  d(1, 1) = std::polar(1.0, g + b);
  d(2, 2) = std::polar(1.0, g + a);
  d(3, 3) = std::polar(1.0, g + a + b);
  return d;
}

double align_objective(const gsl_vector* x, void* params) {
  const auto* p = static_cast<const AlignProblem*>(params);
  const Matrix d = phase_diag(gsl_vector_get(x, 0), gsl_vector_get(x, 1), gsl_vector_get(x, 2));
  return operator_norm(*p->action - d * *p->gate);
}

double wrap_pi(double x) { return std::remainder(x, 2 * std::numbers::pi); }

}  // namespace

std::pair<double, PhaseAlignment> aligned_distance(const Matrix& action, const Matrix& gate) {
  if (action.rows() != 4 || gate.rows() != 4)
    throw std::invalid_argument("aligned_distance works on two-qubit (4x4) actions");
  // Starting point from the diagonal of A G^dagger.
  const Matrix m = action * gate.adjoint();
  const double g0 = std::arg(m(0, 0));
  const double a0 = std::arg(m(2, 2) / m(0, 0));
  const double b0 = std::arg(m(1, 1) / m(0, 0));

  AlignProblem prob{&action, &gate};
  gsl_multimin_function fn{&align_objective, 3, &prob};
  gsl_vector* x = gsl_vector_alloc(3);
  gsl_vector* step = gsl_vector_alloc(3);
  gsl_multimin_fminimizer* s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 3);
  gsl_vector_set(x, 0, g0);
  gsl_vector_set(x, 1, a0);
  gsl_vector_set(x, 2, b0);
  double best = align_objective(x, &prob);
  // Restart the simplex a few times with shrinking steps; NM can stall on the norm's kinks.
  for (double h : {0.2, 0.02, 2e-3, 2e-4}) {
    gsl_vector_set_all(step, h);
    gsl_multimin_fminimizer_set(s, &fn, x, step);
    for (int it = 0; it < 4000; ++it) {
      if (gsl_multimin_fminimizer_iterate(s) != 0) break;
      if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), 1e-13) == GSL_SUCCESS) break;
    }
    if (s->fval <= best) {
      best = s->fval;
      gsl_vector_memcpy(x, s->x);
    }
  }
  PhaseAlignment pa{wrap_pi(gsl_vector_get(x, 0)), wrap_pi(gsl_vector_get(x, 1)),
                    wrap_pi(gsl_vector_get(x, 2))};
  gsl_multimin_fminimizer_free(s);
  gsl_vector_free(step);
  gsl_vector_free(x);
  return {best, pa};
}

GateReport analyze(const CompositeBraid& c, const Matrix& gate, const std::string& name) {
  static const QubitEmbedding embedding = computational_embedding(QubitLayout::two_qubits());
  GateReport r;
  r.target = name;
  const Matrix u = rho6(c.flattened);
  for (std::size_t b = 0; b < embedding.blocks.size(); ++b) {
    const auto charge = static_cast<std::size_t>(to_int(embedding.blocks[b].charge));
    const Matrix a = computational_action(u, embedding, b);
    const auto [eps, phases] = aligned_distance(a, gate);
    r.eps_block[charge] = eps;
    r.phases[charge] = phases;
    r.raw_eps_block[charge] = phase_distance(a, gate).epsilon;
  }
  r.leakage = leakage(u, embedding);
  r.composite_error = distance(u, ideal_composite(c));
  for (const auto& s : c.stages) r.stage_lengths.push_back(s.lifted.length());
  r.total_length = c.flattened.length();
  return r;
}

nlohmann::json GateReport::to_json() const {
  auto phase_json = [](const PhaseAlignment& p) {
    return nlohmann::json{{"global", p.global}, {"control", p.control}, {"target", p.target}};
  };
  nlohmann::json j{{"target", target},
                   {"eps_block0", eps_block[0]},
                   {"eps_block1", eps_block[1]},
                   {"raw_eps_block0", raw_eps_block[0]},
                   {"raw_eps_block1", raw_eps_block[1]},
                   {"leakage", leakage},
                   {"composite_error", composite_error},
                   {"stage_lengths", stage_lengths},
                   {"total_length", total_length},
                   {"phases", {{"block0", phase_json(phases[0])}, {"block1", phase_json(phases[1])}}}};
  j["warning"] = warning.empty() ? nlohmann::json() : nlohmann::json(warning);
  return j;
}

Matrix controlled_phase_gate(int m) {
  Matrix g = Matrix::Identity(4, 4);
  g(2, 2) = std::pow(ModelConstants::r_zero(), 2 * m);
  g(3, 3) = std::pow(ModelConstants::r_one(), 2 * m);
  return g;
}

Matrix cnot_gate() {
  Matrix g = Matrix::Zero(4, 4);
  g(0, 0) = g(1, 1) = g(2, 3) = g(3, 2) = 1.0;
  return g;
}

namespace {

// The pair (strands 1, 2) steps past control strand 3, or back.
Stage control_crossing(bool forward) {
  Stage s;
  s.label = forward ? "cross" : "uncross";
  s.effective = BraidWord{3, {{1, forward ? 1 : -1}}};
  s.triple_start = 1;
  s.mobile_start = forward ? 1 : 2;
  s.mobile_end = forward ? 2 : 1;
  s.lifted = lift_effective(s.effective, 1, s.mobile_start);
  return s;
}

Stage weave_stage(std::string label, const BraidWord& w, int triple_start, int mobile_start,
                  const Matrix& ideal, double eps) {
  const auto cls = classify_weave(w, mobile_start);
  if (!cls) throw std::invalid_argument(label + " word is not a weave of the pair");
  Stage s;
  s.label = std::move(label);
  s.effective = w;
  s.triple_start = triple_start;
  s.mobile_start = mobile_start;
  s.mobile_end = cls.weave->end_pos;
  s.lifted = lift_effective(w, triple_start, mobile_start);
  s.ideal = ideal;
  s.epsilon = eps;
  return s;
}

// Ideal 3x3 map of a found weave: the target times the weave's optimal phase. For
// qubit-block targets the |NC> entry is taken from the weave itself.
Matrix phased_ideal(const SearchResult& r, const Matrix& target, bool block_only) {
  const Complex ph = std::polar(1.0, r.phase);
  if (!block_only) return ph * target;
  Matrix m = Matrix::Zero(3, 3);
  m.topLeftCorner(2, 2) = ph * target.topLeftCorner(2, 2);
  m(2, 2) = rho3(r.best_word)(2, 2);
  return m;
}

}  // namespace

CompositeBraid assemble_controlled_phase(const BraidWord& weave, const Matrix& ideal, double eps) {
  CompositeBraid c;
  add_stage(c, control_crossing(true));
  Stage w = weave_stage("weave", weave, 2, 1, ideal, eps);
  if (w.mobile_end != 1) throw std::invalid_argument("effective weave must return the pair");
  add_stage(c, std::move(w));
  add_stage(c, control_crossing(false));
  return c;
}

CompositeBraid assemble_cnot(const BraidWord& injection, const Matrix& injection_ideal,
                             double injection_eps, const BraidWord& not_word,
                             const Matrix& not_ideal, double not_eps) {
  CompositeBraid c;
  add_stage(c, control_crossing(true));
  Stage inject = weave_stage("inject", injection, 2, 1, injection_ideal, injection_eps);
  if (inject.mobile_end != 3)
    throw std::invalid_argument("injection weave must carry the pair from position 1 to 3");
  add_stage(c, inject);
  Stage flip = weave_stage("not", not_word, 3, 2, not_ideal, not_eps);
  if (flip.mobile_end != 2) throw std::invalid_argument("NOT weave must return the pair");
  add_stage(c, std::move(flip));
  add_stage(c, weave_stage("eject", inverse(injection), 2, 3, injection_ideal.adjoint(),
                           injection_eps));
  add_stage(c, control_crossing(false));
  return c;
}

CompiledGate compile_controlled_phase(int m, const SearchResult& effective_weave) {
  const Matrix target = effective_braiding_target(m);
  CompiledGate out;
  out.braid = assemble_controlled_phase(effective_weave.best_word,
                                        phased_ideal(effective_weave, target, false),
                                        effective_weave.epsilon);
  out.report = analyze(out.braid, controlled_phase_gate(m),
                       "controlled-sigma^" + std::to_string(2 * m));
  if (m % 5 == 0)
    out.report.warning = "m divisible by 5: the controlled rotation is trivial";
  return out;
}

CompiledGate compile_cnot(const SearchResult& injection_weave, const SearchResult& not_weave) {
  Matrix x = Matrix::Zero(3, 3);
  x(0, 1) = x(1, 0) = 1.0;
  CompiledGate out;
  out.braid = assemble_cnot(
      injection_weave.best_word, phased_ideal(injection_weave, Matrix::Identity(3, 3), false),
      injection_weave.epsilon, not_weave.best_word, phased_ideal(not_weave, x, true),
      not_weave.epsilon);
  out.report = analyze(out.braid, cnot_gate(), "cnot");
  return out;
}

}  // namespace fibraid

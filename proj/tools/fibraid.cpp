#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibraid/base_net_io.hpp"
#include "fibraid/braid_word.hpp"
#include "fibraid/fusion_basis.hpp"
#include "fibraid/matrix_io.hpp"
#include "fibraid/render.hpp"
#include "fibraid/search.hpp"
#include "fibraid/solovay_kitaev.hpp"
#include "fibraid/targets.hpp"
#include "fibraid/two_qubit.hpp"
#include "fibraid/verify.hpp"

using namespace fibraid;
using nlohmann::json;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct TargetFlags {
  std::string name;
  std::string file;
  bool block_only = false;
  bool phase_sensitive = false;
};

void add_target_flags(CLI::App* app, TargetFlags& t, bool required) {
  auto* g = app->add_option_group("target");
  g->add_option("--target", t.name, "named target (not, hadamard, z, axis:X,Y,Z,A, identity, effective:M, s1^E, s2^E)");
  g->add_option("--target-file", t.file, "matrix JSON file (2x2 block or 3x3)");
  if (required) g->require_option(1);
  else g->require_option(0, 1);
  app->add_flag("--block-only", t.block_only, "compare only the 2x2 qubit block");
  app->add_flag("--phase-sensitive", t.phase_sensitive, "do not optimize the global phase");
}

std::optional<GateTarget> resolve_target(const TargetFlags& t) {
  std::optional<GateTarget> g;
  if (!t.name.empty()) {
    g = named_target(t.name);
  } else if (!t.file.empty()) {
    const Matrix m = matrix_from_json(json::parse(read_text(t.file)));
    const bool block = t.block_only || m.rows() == 2;
    g = make_target(m, block ? TargetMode::QubitBlockOnly : TargetMode::Full, true, t.file);
  } else {
    return g;
  }
  if (t.block_only && g->mode == TargetMode::Full)
    g = make_target(g->matrix.topLeftCorner(2, 2), TargetMode::QubitBlockOnly, g->phase_free,
                    g->name);
  if (t.phase_sensitive) g->phase_free = false;
  return g;
}

json result_json(const SearchResult& r) {
  return {{"word", format(r.best_word)},     {"length", r.best_word.length()},
          {"epsilon", r.epsilon},            {"phase", r.phase},
          {"words_examined", r.words_examined}, {"tied_candidates", r.tied_candidates},
          {"notes", r.wall_notes}};
}

SearchResult word_result(const std::string& text, const GateTarget& target) {
  const BraidWord w = parse(text, 3);
  const Matrix u = evaluate_matrix(w, representation(3));
  SearchResult r;
  r.best_word = w;
  r.epsilon = target_distance(u, target);
  r.phase = target_phase(u, target);
  r.wall_notes = "given word";
  return r;
}

BaseNet obtain_net(const std::string& file, int base_length, int mobile, int threads) {
  if (!file.empty() && std::filesystem::exists(file)) {
    BaseNet net = load_base_net(file, threads);
    if (net.max_base_length() != base_length || net.mobile() != mobile)
      std::cerr << "note: using net from " << file << " (base length " << net.max_base_length()
                << ", mobile " << net.mobile() << ")\n";
    return net;
  }
  BaseNetOptions o;
  o.mobile = mobile;
  o.threads = threads;
  o.cover_samples = 200;
  BaseNet net = build_base_net(base_length, o);
  if (!file.empty()) save_base_net(net, file);
  return net;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibonacci-anyon braid compiler"};
  app.require_subcommand(1);
  int threads = 0;
  if (const char* env = std::getenv("FIBRAID_THREADS")) threads = std::atoi(env);
  app.add_option("--threads", threads, "OpenMP threads (default: $FIBRAID_THREADS or runtime)");

  // basis
  auto* basis = app.add_subcommand("basis", "fusion-basis dimension and charge blocks");
  int basis_n = 3;
  basis->add_option("n", basis_n, "number of anyons")->required()->check(CLI::Range(1, 30));

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a braid word to its unitary (JSON)");
  int eval_n = 3;
  std::string eval_file = "-";
  TargetFlags eval_target;
  eval->add_option("-n,--strands", eval_n, "number of strands")->check(CLI::Range(2, 16));
  eval->add_option("file", eval_file, "file holding the word ('-' for stdin)");
  add_target_flags(eval, eval_target, false);

  // search
  auto* search = app.add_subcommand("search", "best 3-strand word for a target");
  TargetFlags search_target;
  SearchOptions sopt;
  std::string endpoints;
  std::string method = "mitm";
  add_target_flags(search, search_target, true);
  search->add_option("--max-length", sopt.max_length, "interchange budget")->check(CLI::Range(0, 60));
  search->add_flag("--weave", sopt.weave_only, "only weaves of one mobile strand");
  search->add_option("--endpoints", endpoints, "mobile start,end positions (e.g. 1,3)");
  search->add_option("--method", method, "exhaustive | serial | mitm")
      ->check(CLI::IsMember({"exhaustive", "serial", "mitm"}));
  search->add_option("--max-nodes", sopt.max_nodes, "exhaustive node guard");

  // sk
  auto* sk = app.add_subcommand("sk", "Solovay-Kitaev refinement over a weave net");
  TargetFlags sk_target;
  int sk_depth = 1, sk_base = 14, sk_mobile = 2;
  std::string net_file;
  add_target_flags(sk, sk_target, true);
  sk->add_option("--depth", sk_depth, "recursion depth")->check(CLI::Range(0, 6));
  sk->add_option("--base-length", sk_base, "net interchange budget")->check(CLI::Range(0, 60));
  sk->add_option("--mobile", sk_mobile, "mobile strand position of the net")->check(CLI::Range(1, 3));
  sk->add_option("--net-file", net_file, "load the net from this file, or build and save it");

  // compile-cphase
  auto* cphase = app.add_subcommand("compile-cphase", "controlled rotation by weaving the control pair");
  int cp_m = 1, cp_len = 24;
  std::string cp_word;
  cphase->add_option("--m", cp_m, "number of double windings")->check(CLI::PositiveNumber);
  cphase->add_option("--max-length", cp_len, "weave search budget")->check(CLI::Range(0, 60));
  cphase->add_option("--weave-word", cp_word, "use this effective weave instead of searching");

  // compile-cnot
  auto* cnot = app.add_subcommand("compile-cnot", "controlled-NOT from injection and NOT weaves");
  int cn_len = 24;
  std::string inj_word, not_word;
  cnot->add_option("--max-length", cn_len, "weave search budget")->check(CLI::Range(0, 60));
  cnot->add_option("--injection-word", inj_word, "injection weave (pair 1 -> 3)");
  cnot->add_option("--not-word", not_word, "NOT weave (pair in the middle)");

  // verify
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  unsigned seed = 7;
  verify->add_option("--seed", seed, "sampling seed");

  // render
  auto* render = app.add_subcommand("render", "strand diagram of a braid word");
  std::string render_word;
  int render_n = 3;
  std::string render_format = "ascii";
  render->add_option("word", render_word, "braid word")->required();
  render->add_option("-n,--strands", render_n, "number of strands")->check(CLI::Range(2, 16));
  render->add_option("--format", render_format, "ascii | svg")->check(CLI::IsMember({"ascii", "svg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (threads > 0) omp_set_num_threads(threads);
  sopt.parallel_shards = threads;

  try {
    if (*basis) {
      const auto b = FusionBasis::enumerate(basis_n);
      std::cout << "dim=" << b.dim() << " blocks:";
      for (QSpin q : {QSpin::Zero, QSpin::One}) {
        std::size_t size = 0;
        for (const auto& blk : b.blocks())
          if (blk.charge == q) size = blk.size();
        std::cout << " q-spin" << to_int(q) << "=" << size;
      }
      std::cout << "\n";
    } else if (*eval) {
      const BraidWord w = parse(read_text(eval_file), eval_n);
      const BlockUnitary u = evaluate(w, eval_n);
      json out = to_json(u);
      if (auto t = resolve_target(eval_target)) {
        if (eval_n != 3) throw UsageError("targets are 3-strand; use -n 3");
        out = json{{"unitary", out},
                   {"epsilon", target_distance(u.entries, *t)},
                   {"phase", target_phase(u.entries, *t)}};
      }
      std::cout << out.dump(2) << "\n";
    } else if (*search) {
      const GateTarget t = *resolve_target(search_target);
      if (!endpoints.empty()) {
        char comma = 0;
        std::istringstream ss(endpoints);
        if (!(ss >> sopt.mobile_start >> comma >> sopt.mobile_end) || comma != ',')
          throw UsageError("--endpoints expects START,END");
        sopt.weave_only = true;
      }
      SearchResult r;
      if (method == "serial") r = exhaustive_search_serial(t, sopt);
      else if (method == "exhaustive") r = exhaustive_search(t, sopt);
      else r = mitm_search(t, sopt);
      std::cout << result_json(r).dump(2) << "\n";
    } else if (*sk) {
      const GateTarget t = *resolve_target(sk_target);
      const BaseNet net = obtain_net(net_file, sk_base, sk_mobile, threads);
      const SkResult r = sk_refine(t, sk_depth, net);
      json trace = json::array();
      for (const auto& l : r.trace)
        trace.push_back({{"depth", l.depth}, {"epsilon", l.epsilon}, {"length", l.length}});
      std::cout << json{{"word", format(r.word)},
                        {"epsilon", r.epsilon},
                        {"length", r.word.length()},
                        {"net_base_length", net.max_base_length()},
                        {"net_covering_radius", net.covering_radius()},
                        {"trace", trace}}
                       .dump(2)
                << "\n";
    } else if (*cphase) {
      SearchResult weave;
      if (!cp_word.empty()) {
        weave = word_result(cp_word, make_target(effective_braiding_target(cp_m), TargetMode::Full,
                                                 true, "effective"));
      } else {
        SearchOptions o = sopt;
        o.max_length = cp_len;
        weave = find_effective_braiding_weave(cp_m, o);
      }
      const CompiledGate g = compile_controlled_phase(cp_m, weave);
      if (!g.report.warning.empty()) std::cerr << "warning: " << g.report.warning << "\n";
      json out = g.report.to_json();
      out["weave"] = result_json(weave);
      out["flattened"] = format(g.braid.flattened);
      std::cout << out.dump(2) << "\n";
    } else if (*cnot) {
      SearchOptions o = sopt;
      o.max_length = cn_len;
      Matrix x = Matrix::Zero(3, 3);
      x(0, 1) = x(1, 0) = 1.0;
      const SearchResult inj =
          inj_word.empty()
              ? find_injection_weave(o)
              : word_result(inj_word, make_target(Matrix::Identity(3, 3), TargetMode::Full, true, "identity"));
      const SearchResult flip =
          not_word.empty()
              ? find_not_weave(o)
              : word_result(not_word, make_target(x.topLeftCorner(2, 2), TargetMode::QubitBlockOnly, true, "not"));
      const CompiledGate g = compile_cnot(inj, flip);
      json out = g.report.to_json();
      out["injection"] = result_json(inj);
      out["not"] = result_json(flip);
      out["flattened"] = format(g.braid.flattened);
      std::cout << out.dump(2) << "\n";
    } else if (*verify) {
      bool all = true;
      for (const auto& p : run_invariant_suite(seed, threads)) {
        std::cout << (p.passed ? "PASS " : "FAIL ") << p.name;
        if (!p.detail.empty()) std::cout << " (" << p.detail << ")";
        std::cout << "\n";
        all = all && p.passed;
      }
      return all ? 0 : kExitVerify;
    } else if (*render) {
      const BraidWord w = parse(render_word, render_n);
      std::cout << (render_format == "svg" ? render_svg(w) : render_ascii(w));
    }
  } catch (const ResourceGuardError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "bad JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NetFileError& e) {
    std::cerr << "net file: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerify;
  }
  return 0;
}

#include "fibraid/search.hpp"

#include <cmath>
#include <sstream>

#include <omp.h>

#include "fibraid/metrics.hpp"
#include "fibraid/mitm.hpp"

namespace fibraid {

namespace {

struct Walker {
  const Scorer& scorer;
  const WordSpace& space;
  const RunTable& table;
  CandidateSet found;
  double examined = 0.0;
  std::vector<Crossing> runs;

  void visit(const Element& el, int pos, int last, int remaining) {
    if (space.accepts_end(pos)) {
      examined += 1.0;
      found.offer(scorer.epsilon(el), runs);
    }
    expand(el, pos, last, remaining);
  }

  void expand(const Element& el, int pos, int last, int remaining) {
    for (int k = 1; k <= 2; ++k) {
      if (k == last || !space.allows(k, pos)) continue;
      for (int e : kRunExponents) {
        const int cost = std::abs(e);
        if (cost > remaining) continue;
        Element next{table.block(k, e) * el.block, el.writhe + e};
        runs.push_back({k, e});
        visit(next, move_mobile(pos, k, e), k, remaining - cost);
        runs.pop_back();
      }
    }
  }
};

struct Frontier {
  Element el;
  int pos;
  int last;
  int remaining;
  std::vector<Crossing> runs;
};

void check_space(const WordSpace& space, const SearchOptions& opts) {
  space.validate();
  if (count_words(space) == 0.0)
    throw std::invalid_argument("no word in the search space meets the weave endpoints");
  if (count_nodes(space) > opts.max_nodes)
    throw ResourceGuardError("exhaustive search would visit " +
                             std::to_string(count_nodes(space)) + " nodes (limit " +
                             std::to_string(opts.max_nodes) + ")");
}

int start_pos(const WordSpace& space) { return space.weave_only ? space.mobile_start : 0; }

}  // namespace

SearchResult finish_result(const std::vector<Crossing>& runs, const GateTarget& target,
                           double examined, std::size_t tied, std::string notes) {
  SearchResult r;
  r.best_word = BraidWord{3, runs};
  const Matrix u = evaluate(r.best_word, 3).entries;
  r.epsilon = target_distance(u, target);
  r.phase = target_phase(u, target);
  r.words_examined = examined;
  r.tied_candidates = tied;
  r.wall_notes = std::move(notes);
  return r;
}

SearchResult exhaustive_search_serial(const GateTarget& target, const SearchOptions& opts) {
  const WordSpace space = opts.space();
  check_space(space, opts);
  const Scorer scorer(target);
  Walker w{scorer, space, run_table(), {}, 0.0, {}};
  w.visit(Element{}, start_pos(space), 0, space.max_length);
  return finish_result(w.found.winner(), target, w.examined, w.found.size(),
                       "exhaustive serial");
}

SearchResult exhaustive_search(const GateTarget& target, const SearchOptions& opts) {
  const WordSpace space = opts.space();
  check_space(space, opts);
  const Scorer scorer(target);
  const RunTable& table = run_table();

  // Shards are the subtrees rooted at depth kShardDepth; shallower words are scored here.
  constexpr int kShardDepth = 3;
  Walker shallow{scorer, space, table, {}, 0.0, {}};
  std::vector<Frontier> level{{Element{}, start_pos(space), 0, space.max_length, {}}};
  std::vector<Frontier> shards;
  for (int depth = 0; depth < kShardDepth && !level.empty(); ++depth) {
    std::vector<Frontier> next;
    for (const auto& f : level) {
      if (space.accepts_end(f.pos)) {
        shallow.examined += 1.0;
        shallow.found.offer(scorer.epsilon(f.el), f.runs);
      }
      for (int k = 1; k <= 2; ++k) {
        if (k == f.last || !space.allows(k, f.pos)) continue;
        for (int e : kRunExponents) {
          if (std::abs(e) > f.remaining) continue;
          Frontier child{Element{table.block(k, e) * f.el.block, f.el.writhe + e},
                         move_mobile(f.pos, k, e), k, f.remaining - std::abs(e), f.runs};
          child.runs.push_back({k, e});
          next.push_back(std::move(child));
        }
      }
    }
    level = std::move(next);
  }
  shards = std::move(level);

  std::vector<CandidateSet> results(shards.size());
  std::vector<double> examined(shards.size(), 0.0);
  const int threads = opts.parallel_shards > 0 ? opts.parallel_shards : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t s = 0; s < shards.size(); ++s) {
    const auto& f = shards[s];
    Walker w{scorer, space, table, {}, 0.0, f.runs};
    w.visit(f.el, f.pos, f.last, f.remaining);
    results[s] = std::move(w.found);
    examined[s] = w.examined;
  }

  CandidateSet merged = std::move(shallow.found);
  double total = shallow.examined;
  for (std::size_t s = 0; s < shards.size(); ++s) {
    merged.merge(results[s]);
    total += examined[s];
  }
  std::ostringstream notes;
  notes << "exhaustive, " << shards.size() << " shards";
  return finish_result(merged.winner(), target, total, merged.size(), notes.str());
}

SearchResult mitm_search(const GateTarget& target, const SearchOptions& opts) {
  const WordSpace space = opts.space();
  space.validate();
  if (count_words(space) == 0.0)
    throw std::invalid_argument("no word in the search space meets the weave endpoints");
  MitmIndex index(space, target.mode, opts.max_memory_bytes, opts.parallel_shards);
  return index.nearest(target);
}

Matrix effective_braiding_target(int m) {
  return representation(3).power(2, 2 * m);
}

SearchResult find_effective_braiding_weave(int m, SearchOptions opts, SearchMethod method) {
  if (m < 1) throw std::invalid_argument("effective braiding needs m >= 1");
  opts.weave_only = true;
  opts.mobile_start = 1;
  opts.mobile_end = 1;
  const auto target = make_target(effective_braiding_target(m), TargetMode::Full, true,
                                  "sigma2^" + std::to_string(2 * m));
  return method == SearchMethod::Exhaustive ? exhaustive_search(target, opts)
                                            : mitm_search(target, opts);
}

SearchResult find_injection_weave(SearchOptions opts, SearchMethod method) {
  opts.weave_only = true;
  opts.mobile_start = 1;
  opts.mobile_end = 3;
  const auto target = make_target(Matrix::Identity(3, 3), TargetMode::Full, true, "identity");
  return method == SearchMethod::Exhaustive ? exhaustive_search(target, opts)
                                            : mitm_search(target, opts);
}

SearchResult find_not_weave(SearchOptions opts, SearchMethod method) {
  opts.weave_only = true;
  opts.mobile_start = 2;
  opts.mobile_end = 2;
  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  const auto target = make_target(x, TargetMode::QubitBlockOnly, true, "NOT");
  return method == SearchMethod::Exhaustive ? exhaustive_search(target, opts)
                                            : mitm_search(target, opts);
}

}  // namespace fibraid

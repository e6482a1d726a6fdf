#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "fibraid/braid_word.hpp"
#include "fibraid/mitm.hpp"
#include "fibraid/representation.hpp"
#include "fibraid/search.hpp"
#include "fibraid/solovay_kitaev.hpp"

using namespace fibraid;

namespace {

// Oracle: every raw word of single crossings up to length L, multiplied out directly.
double raw_word_optimum(const GateTarget& target, const SearchOptions& o) {
  const auto& rep = representation(3);
  double best = 1e300;
  std::vector<Crossing> word;
  std::function<void(const Matrix&)> rec = [&](const Matrix& u) {
    bool ok = true;
    if (o.weave_only) {
      const auto end = weave_end_position(BraidWord{3, word}, o.mobile_start);
      ok = end.has_value() && *end == o.mobile_end;
    }
    if (ok) best = std::min(best, target_distance(u, target));
    if (static_cast<int>(word.size()) == o.max_length) return;
    for (int k = 1; k <= 2; ++k)
      for (int e : {1, -1}) {
        if (!word.empty() && word.back().index == k && word.back().exponent == -e) continue;
        word.push_back({k, e});
        rec(rep.power(k, e) * u);
        word.pop_back();
      }
  };
  rec(rep.identity());
  return best;
}

GateTarget random_block_target(std::uint64_t i) {
  return make_target(haar_su2(17, i), TargetMode::QubitBlockOnly, true, "haar");
}

GateTarget random_full_target(std::uint64_t i) {
  Matrix m = Matrix::Zero(3, 3);
  m.topLeftCorner(2, 2) = haar_su2(23, i);
  m(2, 2) = std::polar(1.0, 0.37 * static_cast<double>(i));
  return make_target(m, TargetMode::Full, true, "haar-full");
}

}  // namespace

TEST(Search, ExhaustiveMatchesRawWordOracle) {
  for (std::uint64_t i = 0; i < 6; ++i) {
    SearchOptions o;
    o.max_length = 7;
    for (const GateTarget& t : {random_block_target(i), random_full_target(i)}) {
      EXPECT_NEAR(exhaustive_search_serial(t, o).epsilon, raw_word_optimum(t, o), 1e-12);
    }
    o.weave_only = true;
    o.mobile_start = 1;
    o.mobile_end = i % 2 == 0 ? 1 : 3;
    const GateTarget t = random_full_target(i + 100);
    EXPECT_NEAR(exhaustive_search_serial(t, o).epsilon, raw_word_optimum(t, o), 1e-12);
  }
}

TEST(Search, ParallelShardsGiveIdenticalResults) {
  for (std::uint64_t i = 0; i < 4; ++i) {
    SearchOptions o;
    o.max_length = 11;
    o.weave_only = i % 2 == 1;
    o.mobile_start = o.mobile_end = 2;
    const GateTarget t = random_block_target(i + 40);
    const SearchResult ref = exhaustive_search_serial(t, o);
    for (int shards : {1, 2, 3, 5}) {
      o.parallel_shards = shards;
      const SearchResult r = exhaustive_search(t, o);
      EXPECT_EQ(r.best_word, ref.best_word) << "shards=" << shards;
      EXPECT_EQ(r.epsilon, ref.epsilon);
      EXPECT_EQ(r.words_examined, ref.words_examined);
    }
  }
}

TEST(Search, MeetInTheMiddleMatchesExhaustive) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    SearchOptions o;
    o.max_length = 10;
    o.weave_only = i % 3 != 0;
    o.mobile_start = 1 + static_cast<int>(i % 3);
    o.mobile_end = i % 4 == 1 ? 3 : o.mobile_start;
    const GateTarget t = i % 2 == 0 ? random_block_target(i + 60) : random_full_target(i + 60);
    const SearchResult ex = exhaustive_search(t, o);
    const SearchResult mm = mitm_search(t, o);
    EXPECT_EQ(mm.best_word, ex.best_word) << "target " << i;
    EXPECT_NEAR(mm.epsilon, ex.epsilon, 1e-12);
  }
}

TEST(Search, WordCountsSmallSpaces) {
  EXPECT_EQ(count_words({1, false, 1, 1}), 5.0);
  EXPECT_EQ(count_words({2, false, 1, 1}), 17.0);
  // Weave from 1 back to 1 within 2 crossings: empty, s1^2, s1^-2.
  EXPECT_EQ(count_words({2, true, 1, 1}), 3.0);
}

TEST(Search, ReturnsExactTargetsExactly) {
  SearchOptions o;
  o.max_length = 6;
  const GateTarget t = make_target(evaluate(parse("s1 s2^-2 s1^3", 3), 3).entries,
                                   TargetMode::Full, false, "word");
  const SearchResult r = exhaustive_search(t, o);
  EXPECT_LT(r.epsilon, 1e-12);
  EXPECT_EQ(format(r.best_word), "s1 s2^-2 s1^3");
}

TEST(Search, GuardsAndEndpointErrors) {
  SearchOptions o;
  o.max_length = 20;
  o.max_nodes = 1000;
  EXPECT_THROW(exhaustive_search(random_block_target(1), o), ResourceGuardError);
  SearchOptions m;
  m.max_length = 30;
  m.max_memory_bytes = 1000;
  EXPECT_THROW(mitm_search(random_block_target(1), m), ResourceGuardError);
  SearchOptions e;
  e.max_length = 0;
  e.weave_only = true;
  e.mobile_start = 1;
  e.mobile_end = 3;
  EXPECT_THROW(exhaustive_search(random_block_target(1), e), std::invalid_argument);
}

TEST(Search, NamedWeaveSearchesRespectEndpoints) {
  SearchOptions o;
  o.max_length = 12;
  const SearchResult eff = find_effective_braiding_weave(1, o);
  EXPECT_EQ(weave_end_position(eff.best_word, 1), 1);
  const SearchResult inj = find_injection_weave(o);
  EXPECT_EQ(weave_end_position(inj.best_word, 1), 3);
  const SearchResult nw = find_not_weave(o);
  EXPECT_EQ(weave_end_position(nw.best_word, 2), 2);
  // Inverse of an injection weave ejects with the same distance to the identity.
  const auto target = make_target(Matrix::Identity(3, 3), TargetMode::Full, true, "id");
  EXPECT_NEAR(target_distance(evaluate(inverse(inj.best_word), 3).entries, target), inj.epsilon,
              1e-12);
  EXPECT_EQ(weave_end_position(inverse(inj.best_word), 3), 1);
}

TEST(Search, EpsilonShrinksWithBudget) {
  SearchOptions o;
  double prev = 10;
  for (int len : {4, 8, 12, 16}) {
    o.max_length = len;
    const double eps = mitm_search(random_block_target(3), o).epsilon;
    EXPECT_LE(eps, prev + 1e-15);
    prev = eps;
  }
}

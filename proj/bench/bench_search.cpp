// Serial vs OpenMP exhaustive search vs meet-in-the-middle on the same targets.
//   bench_search [max_length] [threads]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "fibraid/search.hpp"
#include "fibraid/solovay_kitaev.hpp"

using namespace fibraid;

namespace {

double time_of(const std::function<SearchResult()>& f, SearchResult& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int len = argc > 1 ? std::atoi(argv[1]) : 18;
  const int threads = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();
  std::printf("budget %d, %d OpenMP threads (%d cores)\n", len, threads, omp_get_num_procs());
  std::printf("%-10s %12s %12s %12s %10s %s\n", "target", "serial s", "openmp s", "mitm s",
              "epsilon", "agree");
  for (std::uint64_t i = 0; i < 4; ++i) {
    const GateTarget t =
        make_target(haar_su2(404, i), TargetMode::QubitBlockOnly, true, "haar" + std::to_string(i));
    SearchOptions o;
    o.max_length = len;
    o.parallel_shards = threads;
    SearchResult serial, parallel, mitm;
    const double ts = time_of([&] { return exhaustive_search_serial(t, o); }, serial);
    const double tp = time_of([&] { return exhaustive_search(t, o); }, parallel);
    const double tm = time_of([&] { return mitm_search(t, o); }, mitm);
    const bool agree = serial.best_word == parallel.best_word && serial.best_word == mitm.best_word;
    std::printf("%-10s %12.3f %12.3f %12.3f %10.3e %s\n", t.name.c_str(), ts, tp, tm,
                serial.epsilon, agree ? "yes" : "NO");
  }
  return 0;
}

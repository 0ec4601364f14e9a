// Serial reference vs OpenMP for the three parallel kernels.

#include <benchmark/benchmark.h>

#include "iwahori/bernoulli.hpp"
#include "iwahori/galois.hpp"
#include "iwahori/reps.hpp"
#include "iwahori/verify.hpp"

using namespace iwahori;

namespace {

Execution exec_of(const benchmark::State& s) { return s.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_Closure(benchmark::State& state) {
  std::vector<ModMatrix> gens;
  for (const auto& [g, m] : natural_sl_generators(3, 3, 2)) gens.push_back(m);
  for (auto _ : state) {
    auto g = bfs_closure(gens, 1'000'000, exec_of(state));
    benchmark::DoNotOptimize(g.elements.data());
  }
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_Closure)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CharacterSearch(benchmark::State& state) {
  std::vector<std::pair<SimpleType, OmegaChars>> cases;
  for (const char* t : {"A8", "B8", "C8", "D8", "E8"})
    for (long p = 17; p <= 61; ++p)
      if (is_prime(p)) cases.push_back({parse_simple_type(t), omega_chars(p, false)});
  SearchOptions opts;
  opts.exec = exec_of(state);
  for (auto _ : state)
    for (const auto& [t, chars] : cases) benchmark::DoNotOptimize(search_assignment(t, chars, opts));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_CharacterSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RegularitySweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(irregular_primes(3, 2000, RegularityMethod::Modular, exec_of(state)));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_RegularitySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

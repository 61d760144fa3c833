#include <benchmark/benchmark.h>

#include "resonance/catalog.hpp"
#include "resonance/solver.hpp"

namespace {

using namespace resonance;

void BM_BuildCatalog(benchmark::State& state) {
  const auto d = static_cast<std::int32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_class_catalog(d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildCatalog)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

void BM_Pass1Mark(benchmark::State& state) {
  const auto catalog = build_class_catalog(static_cast<std::int32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pass1_mark(catalog, DeficiencyMode::complete));
}
BENCHMARK(BM_Pass1Mark)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

// Pass 5 alone, counting solutions through the streaming sink.
void BM_Pass5Extract(benchmark::State& state) {
  const auto d = static_cast<std::int32_t>(state.range(0));
  const auto mode = DeficiencyMode::complete;
  const auto catalog = build_class_catalog(d);
  const auto grid = pass1_mark(catalog, mode);
  const auto survivors = pass2_discard(grid, catalog, mode);
  const auto store = pass3_link(survivors.survivors, d, mode);
  const auto gathered = pass4_gather(grid, store);
  std::size_t solutions = 0;
  for (auto _ : state) {
    solutions = 0;
    pass5_stream(gathered, store, false, 1,
                 [&](DeficiencyPoint, std::span<const ResonantQuad> b) { solutions += b.size(); });
  }
  state.counters["solutions"] = static_cast<double>(solutions);
  state.counters["per_solution"] = benchmark::Counter(
      static_cast<double>(solutions), benchmark::Counter::kIsIterationInvariantRate |
                                          benchmark::Counter::kInvert);
}
BENCHMARK(BM_Pass5Extract)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_SolveCountOnly(benchmark::State& state) {
  SolverConfig config;
  config.domain_limit = static_cast<std::int32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_stream(config, [](DeficiencyPoint, std::span<const ResonantQuad>) {}));
  }
}
BENCHMARK(BM_SolveCountOnly)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "cdirac_app/runner.hpp"

using namespace cdirac::app;

namespace {

Scenario sl3(std::size_t depth) {
  return parse_scenario(nlohmann::json{{"name", "bench"},
                                       {"cartan_type", "A2"},
                                       {"delta_h", {{1, 0}}},
                                       {"module", {{"kind", "verma"}, {"lambda", "-rho"}}},
                                       {"depth", depth},
                                       {"tasks", {"simple_verma", "dirac", "higher", "index", "vogan"}}});
}

// Whole-scenario cost, including bundle serialization, against the worker count.
void BM_RunScenario(benchmark::State& state) {
  const Scenario s = sl3(static_cast<std::size_t>(state.range(0)));
  const RunOptions opt{std::nullopt, static_cast<std::size_t>(state.range(1)), kDefaultMaxDepth};
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario(s, opt).files().size());
}
BENCHMARK(BM_RunScenario)->ArgsProduct({{6, 8, 10}, {1, 2}})->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();

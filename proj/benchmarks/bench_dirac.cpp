#include <benchmark/benchmark.h>

#include "cdirac/dirac.hpp"
#include "cdirac/hodge.hpp"

using namespace cdirac;

namespace {

struct Case {
  const char* type;
  std::vector<Weight> h;
};

const Case kCases[] = {{"A2", {Weight{1, 0}}}, {"A2", {}}, {"B2", {}}, {"G2", {}}};

void BM_VermaWindow(benchmark::State& state) {
  const Case& c = kCases[state.range(0)];
  DiracSetup s = make_setup(build_root_system(c.type), c.h);
  const auto depth = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verma_window(s.pair, s.cb, -s.pair.rho, depth).dims.size());
  state.SetLabel(c.type);
}
BENCHMARK(BM_VermaWindow)->ArgsProduct({{0, 1, 2, 3}, {4, 8}})->Unit(benchmark::kMillisecond);

void BM_DiracCohomology(benchmark::State& state) {
  const Case& c = kCases[state.range(0)];
  DiracSetup s = make_setup(build_root_system(c.type), c.h);
  const auto depth = static_cast<std::size_t>(state.range(1));
  WeightModuleWindow vw = verma_window(s.pair, s.cb, -s.pair.rho, depth);
  const auto weights = block_weights(s, vw, depth);
  for (auto _ : state)
    for (const auto& mu : weights) benchmark::DoNotOptimize(dirac_cohomology(assemble_block(s, vw, mu)).hd);
  state.SetLabel(std::string(c.type) + ", " + std::to_string(weights.size()) + " blocks");
}
BENCHMARK(BM_DiracCohomology)->ArgsProduct({{0, 1, 2, 3}, {4, 6}})->Unit(benchmark::kMillisecond);

void BM_SquareCheck(benchmark::State& state) {
  DiracSetup s = make_setup(build_root_system("A2"), {Weight{1, 0}});
  const auto depth = static_cast<std::size_t>(state.range(0));
  WeightModuleWindow vw = verma_window(s.pair, s.cb, -s.pair.rho, depth);
  const auto weights = block_weights(s, vw, depth);
  for (auto _ : state)
    for (const auto& mu : weights) benchmark::DoNotOptimize(check_square(s, vw, assemble_block(s, vw, mu)).ok());
}
BENCHMARK(BM_SquareCheck)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_HodgeComparison(benchmark::State& state) {
  DiracSetup s = make_setup(build_root_system("A2"), {Weight{1, 0}});
  HermitianPair hp = detect_hermitian(s.pair, *s.cb);
  const auto depth = static_cast<std::size_t>(state.range(0));
  WeightModuleWindow vw = verma_window(s.pair, s.cb, -s.pair.rho, depth);
  for (auto _ : state) benchmark::DoNotOptimize(hodge_comparison(hp, s, vw, depth).ok);
}
BENCHMARK(BM_HodgeComparison)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

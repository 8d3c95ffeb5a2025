#include <benchmark/benchmark.h>

#include "brauerlab/algebra.hpp"
#include "brauerlab/gt.hpp"

namespace {

void BM_BuildQuiver(benchmark::State& state) {
  const auto config = brauerlab::gt::build_gt_configuration(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brauerlab::build_quiver(config));
}
BENCHMARK(BM_BuildQuiver)->Arg(2)->Arg(8);

void BM_Summary(benchmark::State& state) {
  const auto config = brauerlab::gt::build_gt_configuration(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brauerlab::summarize(config, true));
}
BENCHMARK(BM_Summary)->Arg(2)->Arg(4);

}  // namespace

// Serial reference against the OpenMP drivers over the 34 catalog algebras.

#include <benchmark/benchmark.h>

#include "halfflat/catalog.hpp"

namespace {

using halfflat::Catalog;
using halfflat::Execution;

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::Parallel : Execution::Serial; }

void BM_ClassifyAll(benchmark::State& state) {
  const Catalog& c = Catalog::builtin();
  for (auto _ : state) benchmark::DoNotOptimize(halfflat::classify_all(c, mode(state)));
}

void BM_Table1(benchmark::State& state) {
  const Catalog& c = Catalog::builtin();
  for (auto _ : state) benchmark::DoNotOptimize(halfflat::verify_table1(c, mode(state)));
}

void BM_Table2(benchmark::State& state) {
  const Catalog& c = Catalog::builtin();
  for (auto _ : state) benchmark::DoNotOptimize(halfflat::verify_table2(c, mode(state)));
}

// Arg 0 is the serial reference, 1 the parallel driver.
BENCHMARK(BM_ClassifyAll)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Table1)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Table2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "qcs/figures.hpp"
#include "qcs/moments.hpp"
#include "qcs/observables.hpp"
#include "qcs/sweep.hpp"

namespace {

using qcs::Execution;

void observable_grid(benchmark::State& state, Execution exec) {
  const qcs::Deformation d(0.8);
  const auto xs = qcs::linspace(0.0, 10.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto out = qcs::evaluate_grid(
        xs,
        [&](double x) { return qcs::observables(qcs::StateLabel::real_from_intensity(x), d).snr_b; },
        exec);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void figure(benchmark::State& state, Execution exec) {
  const auto spec = qcs::FigureSpec::defaults(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto t = qcs::build_figure(spec, {}, exec);
    benchmark::DoNotOptimize(t.rows.data());
  }
}

void moments(benchmark::State& state, Execution exec) {
  const qcs::Deformation d(0.8);
  for (auto _ : state) {
    auto r = qcs::map_indices(
        11, [&](std::size_t n) { return qcs::moment_integral(static_cast<int>(n), d).rel_error; }, exec);
    benchmark::DoNotOptimize(r.data());
  }
}

void BM_ObservablesSerial(benchmark::State& s) { observable_grid(s, Execution::serial); }
void BM_ObservablesParallel(benchmark::State& s) { observable_grid(s, Execution::parallel); }
void BM_FigureSerial(benchmark::State& s) { figure(s, Execution::serial); }
void BM_FigureParallel(benchmark::State& s) { figure(s, Execution::parallel); }
void BM_MomentsSerial(benchmark::State& s) { moments(s, Execution::serial); }
void BM_MomentsParallel(benchmark::State& s) { moments(s, Execution::parallel); }

}  // namespace

BENCHMARK(BM_ObservablesSerial)->Arg(201)->Arg(2001)->UseRealTime();
BENCHMARK(BM_ObservablesParallel)->Arg(201)->Arg(2001)->UseRealTime();
BENCHMARK(BM_FigureSerial)->DenseRange(5, 8)->UseRealTime();
BENCHMARK(BM_FigureParallel)->DenseRange(5, 8)->UseRealTime();
BENCHMARK(BM_MomentsSerial)->UseRealTime();
BENCHMARK(BM_MomentsParallel)->UseRealTime();

BENCHMARK_MAIN();

// Serial reference vs OpenMP paths of the batch kernels.

#include <benchmark/benchmark.h>

#include "foldwave/design_io.hpp"
#include "foldwave/kernels.hpp"

namespace {

using foldwave::Execution;

const foldwave::StripDesign& design() {
  static const foldwave::StripDesign d =
      foldwave::read_design_file(FOLDWAVE_DATA_DIR "/designs/fig4b.json");
  return d;
}

void BM_OrbitSweep(benchmark::State& state, Execution exec) {
  const auto angles = foldwave::frame_angles(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(foldwave::orbit_sweep(design(), angles, 50, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FrameSweep(benchmark::State& state, Execution exec) {
  const auto angles = foldwave::frame_angles(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(foldwave::frame_sweep(design(), angles, 20, exec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ClosureResidual(benchmark::State& state, Execution exec) {
  const auto angles = foldwave::frame_angles(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(foldwave::max_closure_residual(design(), angles, 20, exec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK_CAPTURE(BM_OrbitSweep, serial, Execution::Serial)->Arg(256)->Arg(4096);
BENCHMARK_CAPTURE(BM_OrbitSweep, openmp, Execution::Parallel)->Arg(256)->Arg(4096);
BENCHMARK_CAPTURE(BM_FrameSweep, serial, Execution::Serial)->Arg(64)->Arg(512);
BENCHMARK_CAPTURE(BM_FrameSweep, openmp, Execution::Parallel)->Arg(64)->Arg(512);
BENCHMARK_CAPTURE(BM_ClosureResidual, serial, Execution::Serial)->Arg(256);
BENCHMARK_CAPTURE(BM_ClosureResidual, openmp, Execution::Parallel)->Arg(256);

}  // namespace

BENCHMARK_MAIN();

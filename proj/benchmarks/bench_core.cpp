#include <benchmark/benchmark.h>

#include "illposed/adversarial.hpp"
#include "illposed/spectral.hpp"

using namespace illposed;

static void BM_GramMatrixLaplace(benchmark::State& state) {
  const QuadGrid grid = make_grid(Interval(1, 2), int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(make_laplace(1, 2), grid));
}
BENCHMARK(BM_GramMatrixLaplace)->Arg(128)->Arg(256)->Arg(512);

static void BM_GramMatrixHilbert(benchmark::State& state) {
  const QuadGrid grid = make_grid(Interval(0, 1), int(state.range(0)));
  const auto op = make_hilbert(Interval(0, 1), Interval(2, 3));
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(op, grid));
}
BENCHMARK(BM_GramMatrixHilbert)->Arg(128)->Arg(256);

static void BM_EigSym(benchmark::State& state) {
  const auto m = gram_matrix(make_fourier(), make_grid(Interval(-1, 1), int(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(eig_sym(m.entries, SpectrumOrder::DescendingIntegral));
}
BENCHMARK(BM_EigSym)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_CommutingSpectrumLaplace(benchmark::State& state) {
  const auto m = gram_matrix(make_laplace(1, 2), make_grid(Interval(1, 2), 256));
  const auto bg = assemble_bertero_grunbaum(Interval(1, 2), 128);
  for (auto _ : state) benchmark::DoNotOptimize(commuting_spectrum(m, bg, 25));
}
BENCHMARK(BM_CommutingSpectrumLaplace)->Unit(benchmark::kMillisecond);

static void BM_AssembleProlate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(assemble_prolate(int(state.range(0))));
}
BENCHMARK(BM_AssembleProlate)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_BuildGramianHilbert(benchmark::State& state) {
  const Interval I(0, 1);
  const auto op = make_hilbert(I, Interval(2, 3));
  const QuadGrid grid = make_grid(I, 256);
  const auto basis = make_basis("sine", I, int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_gramian(op, basis, grid));
}
BENCHMARK(BM_BuildGramianHilbert)->Arg(4)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

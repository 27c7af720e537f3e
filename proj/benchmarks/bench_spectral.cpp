#include <benchmark/benchmark.h>

#include "htype/minimizer.hpp"
#include "htype/spectral.hpp"

namespace {

void BM_Assemble(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  const htype::BiradialRule rule = htype::make_rule(2, 1, 64);
  const htype::GalerkinBasis basis = htype::default_basis(2, 1, K);
  for (auto _ : state) benchmark::DoNotOptimize(htype::assemble(rule, basis));
}
BENCHMARK(BM_Assemble)->Arg(5)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_SolveGevp(benchmark::State& state) {
  const htype::Assembly a = htype::assemble(htype::make_rule(2, 1, 64), htype::default_basis(2, 1, 15));
  for (auto _ : state) benchmark::DoNotOptimize(htype::solve_gevp(a.A, a.B));
}
BENCHMARK(BM_SolveGevp)->Unit(benchmark::kMicrosecond);

void BM_Spectrum(benchmark::State& state) {
  const htype::HTypeStructure s = htype::construct_structure(4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(htype::spectrum(s, 15, 64));
}
BENCHMARK(BM_Spectrum)->Unit(benchmark::kMillisecond);

void BM_MinimizeSubcritical(benchmark::State& state) {
  const htype::HTypeStructure s = htype::construct_structure(2, 1);
  const htype::BiradialRule rule = htype::make_rule(2, 1, 64);
  for (auto _ : state) benchmark::DoNotOptimize(htype::minimize_subcritical(s, 3.0, rule));
}
BENCHMARK(BM_MinimizeSubcritical)->Unit(benchmark::kMillisecond);

}  // namespace

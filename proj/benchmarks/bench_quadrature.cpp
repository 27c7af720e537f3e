#include <benchmark/benchmark.h>

#include "htype/functionals.hpp"
#include "htype/parallel.hpp"
#include "htype/quadrature.hpp"

namespace {

void BM_MakeRule(benchmark::State& state) {
  const int nodes = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(htype::make_rule(2, 1, nodes));
}
BENCHMARK(BM_MakeRule)->Arg(64)->Arg(128)->Arg(256);

void BM_HorizontalEnergy(benchmark::State& state) {
  const int nodes = static_cast<int>(state.range(0));
  htype::parallel::set_thread_count(static_cast<int>(state.range(1)));
  const htype::BiradialRule rule = htype::make_rule(4, 3, nodes);
  const htype::BiradialField u = htype::bubble_profile(4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(htype::horizontal_energy(rule, u));
  htype::parallel::set_thread_count(1);
}
BENCHMARK(BM_HorizontalEnergy)->Args({64, 1})->Args({128, 1})->Args({128, 4})->Unit(benchmark::kMicrosecond);

void BM_FsQuotient(benchmark::State& state) {
  const htype::BiradialRule rule = htype::make_rule(2, 1, 128);
  const htype::BiradialField u = htype::bubble_profile(2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(htype::fs_quotient(rule, u));
}
BENCHMARK(BM_FsQuotient)->Unit(benchmark::kMicrosecond);

}  // namespace

#include <benchmark/benchmark.h>

#include "htype/calculus.hpp"
#include "htype/closedform.hpp"

namespace {

htype::GroupPoint probe(int m, int n) {
  htype::GroupPoint xi = htype::GroupPoint::identity(m, n);
  for (int i = 0; i < m; ++i) xi.x[i] = 0.3 + 0.1 * i;
  for (int r = 0; r < n; ++r) xi.t[r] = -0.2 + 0.05 * r;
  return xi;
}

void BM_EuclidDerivatives(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  const htype::HTypeStructure s = htype::construct_structure(m, n);
  const htype::ScalarField u = htype::bubble_field(s);
  const htype::GroupPoint xi = probe(m, n);
  for (auto _ : state) benchmark::DoNotOptimize(htype::euclid_derivatives(u, xi));
}
BENCHMARK(BM_EuclidDerivatives)->Args({2, 1})->Args({4, 3})->Args({8, 7})->Args({16, 8});

void BM_Sublaplacian(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  const htype::HTypeStructure s = htype::construct_structure(m, n);
  const htype::ScalarField u = htype::bubble_field(s);
  const htype::GroupPoint xi = probe(m, n);
  for (auto _ : state) benchmark::DoNotOptimize(htype::sublaplacian(s, u, xi));
}
BENCHMARK(BM_Sublaplacian)->Args({2, 1})->Args({4, 3})->Args({8, 7});

void BM_EigenResidual(benchmark::State& state) {
  const htype::HTypeStructure s = htype::construct_structure(4, 3);
  const htype::GroupPoint xi = probe(4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(htype::eigen_residual(s, 8, xi));
}
BENCHMARK(BM_EigenResidual);

}  // namespace

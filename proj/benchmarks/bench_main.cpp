#include <benchmark/benchmark.h>

#include "qaff/lyndon.hpp"
#include "qaff/prefund.hpp"
#include "qaff/shuffle.hpp"

using namespace qaff;

namespace {

void BM_ShuffleProduct(benchmark::State& state) {
  const CartanData& cd = cartan_data("C3");
  const int len = static_cast<int>(state.range(0));
  Word u, v;
  for (int k = 0; k < len; ++k) {
    u.push_back(static_cast<char>(1 + k % 3));
    v.push_back(static_cast<char>(3 - k % 3));
  }
  ShuffleElement x = ShuffleElement::word(u), y = ShuffleElement::word(v);
  for (auto _ : state) {
    ShuffleAlgebra alg(cd);
    benchmark::DoNotOptimize(alg.product(x, y));
  }
}
BENCHMARK(BM_ShuffleProduct)->DenseRange(2, 6, 2);

void BM_DualRootVector(benchmark::State& state) {
  const CartanData& cd = cartan_data("E6");
  for (auto _ : state) {
    ShuffleAlgebra alg(cd);
    benchmark::DoNotOptimize(dual_root_vector(alg, cd.theta()));
  }
}
BENCHMARK(BM_DualRootVector)->Unit(benchmark::kMillisecond);

void BM_SerreCheck(benchmark::State& state) {
  const CartanData& cd = cartan_data("C3");
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Realization real(cd, 3, Sign::negative);
    benchmark::DoNotOptimize(real.serre_check(depth));
  }
}
BENCHMARK(BM_SerreCheck)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_EllWeight(benchmark::State& state) {
  const CartanData& cd = cartan_data("A3");
  const int kmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Realization real(cd, 2, Sign::negative);
    benchmark::DoNotOptimize(real.ell_weight(kmax));
  }
}
BENCHMARK(BM_EllWeight)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

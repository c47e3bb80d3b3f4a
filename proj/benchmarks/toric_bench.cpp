#include <random>

#include <benchmark/benchmark.h>

#include "toric/builtins.hpp"
#include "toric/homology.hpp"
#include "toric/lattice.hpp"
#include "toric/quantum.hpp"

using namespace toric;

static void BM_HermiteNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-20, 20);
  IntMatrix m(n, n + 2);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(4)->Arg(8)->Arg(16);

static void BM_PrimitiveCollections(benchmark::State& state) {
  Fan f = builtin("cp:" + std::to_string(state.range(0))).fan;
  for (auto _ : state) benchmark::DoNotOptimize(primitive_collections(f));
}
BENCHMARK(BM_PrimitiveCollections)->Arg(2)->Arg(4)->Arg(8);

static void BM_HomologyRing(benchmark::State& state) {
  Fan f = builtin("cp:" + std::to_string(state.range(0))).fan;
  for (auto _ : state) benchmark::DoNotOptimize(HomologyRing(f));
}
BENCHMARK(BM_HomologyRing)->Arg(2)->Arg(4)->Arg(6);

static void BM_QuantumPower(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  QuantumRing q(builtin("cp:" + std::to_string(n)).fan);
  QHClass h = q.divisor(0);
  for (auto _ : state) {
    QHClass p = q.unit();
    for (std::size_t i = 0; i <= n; ++i) p = q.product(p, h);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_QuantumPower)->Arg(2)->Arg(4)->Arg(6);

static void BM_QuantumRingQuadric(benchmark::State& state) {
  Fan f = builtin("cp1xcp1").fan;
  for (auto _ : state) benchmark::DoNotOptimize(QuantumRing(f));
}
BENCHMARK(BM_QuantumRingQuadric);

BENCHMARK_MAIN();

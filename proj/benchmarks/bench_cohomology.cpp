#include <benchmark/benchmark.h>

#include "quandelier/cohomology.hpp"

namespace {

  using namespace quandelier;

  void BM_H2Integral(benchmark::State& state) {
    FiniteQuandle q = dihedral(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(h2_integral(q));
    }
  }
  BENCHMARK(BM_H2Integral)->DenseRange(3, 11, 2)->Unit(benchmark::kMillisecond);

  void BM_IsCocycle(benchmark::State& state) {
    FiniteQuandle q = dihedral(static_cast<std::size_t>(state.range(0)));
    Coefficients  c = Coefficients::uniform(q, GroupTable::cyclic(2));
    Cocycle2      f = Cocycle2::trivial(q, c);
    for (auto _ : state) {
      benchmark::DoNotOptimize(is_cocycle(q, c, f).ok);
    }
  }
  BENCHMARK(BM_IsCocycle)->RangeMultiplier(2)->Range(4, 64);

  void BM_H2BruteForce(benchmark::State& state) {
    FiniteQuandle q = dihedral(static_cast<std::size_t>(state.range(0)));
    Coefficients  c = Coefficients::uniform(q, GroupTable::cyclic(2));
    for (auto _ : state) {
      benchmark::DoNotOptimize(h2_brute_force(q, c, 0).representatives.size());
    }
  }
  BENCHMARK(BM_H2BruteForce)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

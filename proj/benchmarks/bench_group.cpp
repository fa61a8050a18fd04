#include <benchmark/benchmark.h>

#include <random>

#include "quandelier/fp_group.hpp"
#include "quandelier/fundamental.hpp"
#include "quandelier/smith.hpp"
#include "quandelier/todd_coxeter.hpp"

namespace {

  using namespace quandelier;

  FiniteQuandle transpositions(std::size_t k) {
    return conj_class(symmetric_group(k), transposition(k, 0, 1));
  }

  void BM_Closure(benchmark::State& state) {
    auto const k = static_cast<std::size_t>(state.range(0));
    std::vector<Perm> gens{transposition(k, 0, 1)};
    std::vector<Point> c(k);
    for (std::size_t i = 0; i < k; ++i) {
      c[i] = static_cast<Point>(i);
    }
    gens.push_back(cycle(k, c));
    for (auto _ : state) {
      benchmark::DoNotOptimize(closure(gens, k, Budgets{}.group_elements));
    }
  }
  BENCHMARK(BM_Closure)->DenseRange(4, 7);

  // Adj(Q) modulo the basepoint generator, for transposition quandles.
  void BM_ToddCoxeterAdjoint(benchmark::State& state) {
    FiniteQuandle q  = transpositions(static_cast<std::size_t>(state.range(0)));
    Presentation  p  = adjoint_presentation(q);
    Word const    h[] = {Word{letter(0)}};
    for (auto _ : state) {
      benchmark::DoNotOptimize(todd_coxeter(p, h).coset_count());
    }
  }
  BENCHMARK(BM_ToddCoxeterAdjoint)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

  void BM_ToddCoxeterDihedral(benchmark::State& state) {
    FiniteQuandle q = dihedral(static_cast<std::size_t>(state.range(0)));
    Presentation  p = adjoint_presentation(q);
    Word const    h[] = {Word{letter(0)}};
    for (auto _ : state) {
      benchmark::DoNotOptimize(todd_coxeter(p, h).coset_count());
    }
  }
  BENCHMARK(BM_ToddCoxeterDihedral)->RangeMultiplier(3)->Range(3, 81)->Unit(benchmark::kMillisecond);

  void BM_SmithNormalForm(benchmark::State& state) {
    auto const    n = static_cast<std::size_t>(state.range(0));
    std::mt19937  rng(7);
    std::uniform_int_distribution<int> entry(-9, 9);
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) = entry(rng);
      }
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(smith_normal_form(m));
    }
  }
  BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32);

  void BM_AbelianInvariants(benchmark::State& state) {
    Presentation p =
        adjoint_presentation(transpositions(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) {
      benchmark::DoNotOptimize(abelian_invariants(p));
    }
  }
  BENCHMARK(BM_AbelianInvariants)->DenseRange(3, 6);

  void BM_UniversalCover(benchmark::State& state) {
    FiniteQuandle q = transpositions(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(universal_cover(q).cover().size());
    }
  }
  BENCHMARK(BM_UniversalCover)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

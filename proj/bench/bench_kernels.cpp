// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "pairzeta/motivic.hpp"
#include "pairzeta/qplane.hpp"
#include "pairzeta/rings.hpp"
#include "pairzeta/slices.hpp"
#include "pairzeta/wallcross.hpp"

using namespace pairzeta;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

SkewSeries dense_series(int rank, int degrees, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  SkewSeries::Terms terms{{FramedClass{}, ScalarValue(1)}};
  for (int r = 0; r <= rank; ++r)
    for (int v = 0; v <= 1; ++v)
      for (int d = 0; d < degrees; ++d) {
        if (r == 0 && v == 0) continue;
        terms[FramedClass{r, d, v}] = ScalarValue(coeff(rng)) + ScalarValue(coeff(rng)) * ScalarValue::curve_param(1);
      }
  return SkewSeries(Window{rank, 1}, std::move(terms));
}

void BM_SkewMultiply(benchmark::State& state) {
  QuantumPlane plane(1);
  auto a = dense_series(4, 6, 1), b = dense_series(4, 6, 2);
  for (auto _ : state) benchmark::DoNotOptimize(plane.multiply(a, b, exec_of(state)));
}

void BM_ChainSum(benchmark::State& state) {
  rings::MatrixRing ring{3};
  slices::SliceEngine eng(slices::StabilityContext::plane_default(), ring);
  std::mt19937_64 rng(5);
  auto a = rings::random_family(ring, eng.context(), 8, rng);
  for (auto _ : state) benchmark::DoNotOptimize(eng.b_from_a(a, {4, 4}, exec_of(state)));
}

void BM_SliceBruteforce(benchmark::State& state) {
  auto c = Curve::symbolic(1);
  SliceBounds bounds{SliceMode::ge, make_rational(1, 3)};
  for (auto _ : state) {
    c.memo().clear();
    benchmark::DoNotOptimize(slice_bruteforce(c, {4, 3}, bounds, exec_of(state)));
  }
}

void BM_PairGrid(benchmark::State& state) {
  std::vector<PairQuery> grid;
  for (const auto& tau : {make_rational(3, 4), make_rational(7, 5), make_rational(9, 4)})
    for (std::int64_t d = 0; d <= 6; ++d) grid.push_back({3, d, tau});
  for (auto _ : state) {
    auto c = Curve::symbolic(1);  // fresh memo table per iteration
    benchmark::DoNotOptimize(f_tau_grid(c, grid, PairMethod::lemma, exec_of(state)));
  }
}

}  // namespace

BENCHMARK(BM_SkewMultiply)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChainSum)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SliceBruteforce)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairGrid)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "qcol/braid.hpp"
#include "qcol/burau.hpp"
#include "qcol/coloring.hpp"
#include "qcol/linalg.hpp"

using namespace qcol;

namespace {

const BraidWord kTrefoil = parse_braid("{1,1,1}");
const BraidWord k815 = parse_braid("{1,1,-2,1,3,2,2,2,3}");
const BraidWord kL9n27 = parse_braid("{-3,-2,1,1,-2,3,2,-1,2,-1,2}");

void BM_ReducedAlexanderTrefoil(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reduced_alexander(kTrefoil));
}
BENCHMARK(BM_ReducedAlexanderTrefoil);

void BM_ReducedAlexander815(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reduced_alexander(k815));
}
BENCHMARK(BM_ReducedAlexander815);

void BM_ReducedAlexanderL9n27(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reduced_alexander(kL9n27));
}
BENCHMARK(BM_ReducedAlexanderL9n27);

void BM_EchelonFixedPoint815(benchmark::State& state) {
  Matrix m = burau_unreduced(k815) - Matrix::identity(4);
  for (auto _ : state) benchmark::DoNotOptimize(echelonize(m));
}
BENCHMARK(BM_EchelonFixedPoint815);

void BM_ConstructColoring815(benchmark::State& state) {
  Laurent f = Laurent::parse("t^2 - t + 1");
  for (auto _ : state) benchmark::DoNotOptimize(construct_coloring(k815, f));
}
BENCHMARK(BM_ConstructColoring815);

void BM_CountColorings(benchmark::State& state) {
  FiniteQuandle q(5, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(count_colorings_finite(k815, q));
}
BENCHMARK(BM_CountColorings);

void BM_GcdLaurent(benchmark::State& state) {
  Laurent a = Laurent::parse("3*t^6 - 8*t^5 + 14*t^4 - 16*t^3 + 14*t^2 - 8*t + 3");
  Laurent b = Laurent::parse("3*t^4 - 8*t^3 + 11*t^2 - 8*t + 3");
  for (auto _ : state) benchmark::DoNotOptimize(Laurent::gcd(a, b));
}
BENCHMARK(BM_GcdLaurent);

}  // namespace

BENCHMARK_MAIN();

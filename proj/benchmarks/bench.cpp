#include <benchmark/benchmark.h>

#include "superfit/fitting.hpp"

using namespace superfit;

namespace {

void BM_Buchberger(benchmark::State& state) {
  auto ring = RingSpec::make({"x", "y"}, {"a", "b"}, 0);
  std::vector<SuperPoly> gens{
      SuperPoly::parse(ring, "a*x*y"), SuperPoly::parse(ring, "b*x*y"),
      SuperPoly::parse(ring, "x^2*y - x*a*b"),
      SuperPoly::parse(ring, "x*y^2 + y*a*b")};
  for (auto _ : state) {
    Ideal I(ring, gens);
    benchmark::DoNotOptimize(I.gb().generators.size());
  }
}
BENCHMARK(BM_Buchberger);

void BM_Annihilator(benchmark::State& state) {
  int d = (int)state.range(0), e = (int)state.range(1);
  int m = (int)state.range(2), n = (int)state.range(3);
  GenericSetup s = genericSetup(d, e, m, n, 0);
  for (auto _ : state) {
    Ideal ann = annihilator(s.Phi);
    benchmark::DoNotOptimize(ann.generators().size());
  }
}
BENCHMARK(BM_Annihilator)->Args({1, 1, 1, 1})->Args({1, 1, 2, 1})
    ->Args({0, 2, 2, 0})->Unit(benchmark::kMillisecond);

void BM_IdealILambda(benchmark::State& state) {
  GenericSetup s = genericSetup(1, 1, 2, 1, 0);
  Partition lam = lambdaDE(1, 1);
  for (auto _ : state) {
    Ideal I = idealILambda(s, lam);
    benchmark::DoNotOptimize(I.generators().size());
  }
}
BENCHMARK(BM_IdealILambda)->Unit(benchmark::kMillisecond);

}  // namespace

#include <benchmark/benchmark.h>

#include "legscale/deriv_expand.hpp"
#include "legscale/legendre.hpp"
#include "legscale/oracle.hpp"
#include "legscale/scale_expand.hpp"

using namespace legscale;

namespace {

void BM_LegendreBonnet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(legendre_bonnet(n));
}
BENCHMARK(BM_LegendreBonnet)->Arg(10)->Arg(20)->Arg(40);

void BM_LegendreMurphy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(legendre_murphy(n));
}
BENCHMARK(BM_LegendreMurphy)->Arg(10)->Arg(20)->Arg(40);

void BM_DerivTelescoping(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(deriv_expand_telescoping(n, n / 3));
}
BENCHMARK(BM_DerivTelescoping)->Arg(10)->Arg(30);

void BM_DerivTriangular(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(deriv_expand_triangular(n, n / 3));
}
BENCHMARK(BM_DerivTriangular)->Arg(10)->Arg(30);

void BM_DerivRecurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(deriv_expand_recurrence(n, n / 3));
}
BENCHMARK(BM_DerivRecurrence)->Arg(10)->Arg(30);

void BM_DerivativeForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Rational lambda(-3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(expand_derivative_form(lambda, n));
}
BENCHMARK(BM_DerivativeForm)->Arg(10)->Arg(30);

void BM_LegendreForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Rational lambda(-3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(expand_legendre_form(lambda, n));
}
BENCHMARK(BM_LegendreForm)->Arg(10)->Arg(30);

void BM_Reconstruct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto e = expand_legendre_form(Rational(7, 3), n);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::reconstruct(e));
}
BENCHMARK(BM_Reconstruct)->Arg(10)->Arg(30);

}  // namespace

BENCHMARK_MAIN();

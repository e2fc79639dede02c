#include <benchmark/benchmark.h>

#include "quadpow/case_analysis.hpp"
#include "quadpow/constructions.hpp"
#include "quadpow/expr.hpp"
#include "quadpow/klein.hpp"
#include "quadpow/sylvester.hpp"

using namespace quadpow;

static void BM_ScalarArithmetic(benchmark::State& state) {
  const Scalar a = parse_scalar("sqrt(2) + 3*i/7");
  const Scalar b = parse_scalar("zeta(8,1) - omega");
  for (auto _ : state) {
    Scalar c = a * b + a.inverse() - b * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_ScalarArithmetic);

static void BM_VerifyCatalog(benchmark::State& state) {
  const auto names = catalog_names();
  for (auto _ : state) {
    for (const auto& n : names) benchmark::DoNotOptimize(check_entry(catalog_entry(n)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(names.size()));
}
BENCHMARK(BM_VerifyCatalog)->Unit(benchmark::kMillisecond);

static void BM_PowerKernel(benchmark::State& state) {
  const PowerIdentity id = catalog("icosa14");
  const FormSet forms = id.forms();
  for (auto _ : state) benchmark::DoNotOptimize(power_kernel(forms, id.d));
}
BENCHMARK(BM_PowerKernel)->Unit(benchmark::kMillisecond);

static void BM_PsiEven(benchmark::State& state) {
  const long s = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(build(recipe::PsiEven{s}));
}
BENCHMARK(BM_PsiEven)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

static void BM_TwoPowerDecompose(benchmark::State& state) {
  const BinaryForm p = left_value(catalog("tame43"));
  for (auto _ : state) benchmark::DoNotOptimize(two_power_decompose(p));
}
BENCHMARK(BM_TwoPowerDecompose);

static void BM_TameAnalyze(benchmark::State& state) {
  const long d = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(tame_analyze(d));
}
BENCHMARK(BM_TameAnalyze)->Arg(6)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_KleinRecognize(benchmark::State& state) {
  const PowerIdentity id = catalog("icosa14");
  for (auto _ : state) {
    const auto pts = klein_set(id, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(recognize(pts));
  }
}
BENCHMARK(BM_KleinRecognize)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

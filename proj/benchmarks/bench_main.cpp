#include "nctorus/dynamics.hpp"
#include "nctorus/invariant.hpp"
#include "nctorus/theta.hpp"
#include "nctorus/weyl.hpp"

#include <benchmark/benchmark.h>

using namespace nctorus;

namespace {

const Mat2Z kFib{1, 1, 1, 0};
const Mat2Z kCat{3, 1, 2, 1};

void BM_QuadNumMul(benchmark::State& state) {
  const QuadNum x = QuadNum::make(5, 1, 10, 5);
  const QuadNum y = QuadNum::make(-3, 7, 4, 5);
  for (auto _ : state) benchmark::DoNotOptimize(x * y + x / y);
}
BENCHMARK(BM_QuadNumMul);

void BM_ModOne(benchmark::State& state) {
  const QuadNum x = QuadNum::make(123456789, -98765, 17, 5);
  for (auto _ : state) benchmark::DoNotOptimize(mod_one(x));
}
BENCHMARK(BM_ModOne);

void BM_TraceRange(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(trace_range(kCat));
}
BENCHMARK(BM_TraceRange);

void BM_ThetaBothRoutes(benchmark::State& state) {
  for (auto _ : state) {
    const HypMatrix h = HypMatrix::certify(kFib);
    benchmark::DoNotOptimize(theta_closed_form(h));
    benchmark::DoNotOptimize(theta_from_eigenvectors(h));
  }
}
BENCHMARK(BM_ThetaBothRoutes);

void BM_ConjugatorSearch(benchmark::State& state) {
  const Mat2Z b = mat_inv(Mat2Z{1, 1, 0, 1}) * kCat * Mat2Z{1, 1, 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(conjugator_search(kCat, b, state.range(0)));
}
BENCHMARK(BM_ConjugatorSearch)->Arg(2)->Arg(3);

void BM_WeylMul(benchmark::State& state) {
  const ThetaVector t = theta_from_eigenvectors(HypMatrix::certify(kFib));
  const WeylElement x{QuadNum(), {3, -2, 5, 1}};
  const WeylElement y{QuadNum(), {-4, 2, 1, -3}};
  for (auto _ : state) benchmark::DoNotOptimize(weyl_mul(x, y, t));
}
BENCHMARK(BM_WeylMul);

void BM_NondegeneracyScan(benchmark::State& state) {
  const ThetaVector t = theta_from_eigenvectors(HypMatrix::certify(kCat));
  for (auto _ : state) benchmark::DoNotOptimize(nondegeneracy_scan(t, state.range(0)));
}
BENCHMARK(BM_NondegeneracyScan)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_OrbitDensity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(orbit_density_estimate(kFib, {0.0, 0.0}, state.range(0), 50));
}
BENCHMARK(BM_OrbitDensity)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

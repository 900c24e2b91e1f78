#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "hankel/kernels.hpp"
#include "hankel/operators.hpp"
#include "hankel/specfun.hpp"

using namespace hankel;
using specfun::Complex;

static void BM_E1Series(benchmark::State& state) {
  const Complex z(-1.5, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(specfun::e1(z));
}
BENCHMARK(BM_E1Series);

static void BM_E1ContinuedFraction(benchmark::State& state) {
  const Complex z(15.0, 15.0);
  for (auto _ : state) benchmark::DoNotOptimize(specfun::e1(z));
}
BENCHMARK(BM_E1ContinuedFraction);

static void BM_SincDerivatives(benchmark::State& state) {
  std::vector<double> out(kMaxSincDerivative + 1);
  const double x = static_cast<double>(state.range(0)) / 4.0;
  for (auto _ : state) {
    specfun::sinc_derivatives(x, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_SincDerivatives)->Arg(2)->Arg(20)->Arg(200);

static void BM_KernelClosed(benchmark::State& state) {
  const kernels::KernelOrder ell(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::k_closed(ell, 2.5));
}
BENCHMARK(BM_KernelClosed)->DenseRange(1, 8, 7);

static void BM_KernelConvolution(benchmark::State& state) {
  const kernels::KernelOrder ell(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::k_conv(ell, 2.5));
}
BENCHMARK(BM_KernelConvolution)->DenseRange(1, 8, 7)->Unit(benchmark::kMicrosecond);

static void BM_JacobiEigen(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = operators::hankel_truncation(kernels::KernelOrder(0), n).entries;
  for (auto _ : state) benchmark::DoNotOptimize(operators::symm_eigen(h));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JacobiEigen)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond)->Complexity();

BENCHMARK_MAIN();

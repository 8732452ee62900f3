#include <benchmark/benchmark.h>

#include <bistat/profiles.hpp>
#include <bistat/quadrature.hpp>

#include <cmath>

namespace {

void BM_IntegrateSmooth(benchmark::State& state) {
  bistat::QuadratureOptions options;
  options.abs_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bistat::integrate([](double x) { return std::exp(-x) * std::cos(5 * x); }, 0.0, 10.0, options).value);
  }
}
BENCHMARK(BM_IntegrateSmooth)->Arg(8)->Arg(10)->Arg(12);

void BM_IntegrateDecaying(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bistat::integrate_decaying([](double s) { return 1.0 / (1.0 + s * s); }, 0.5, 1e-10).value);
  }
}
BENCHMARK(BM_IntegrateDecaying);

void BM_ShapeConstant(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bistat::shape_constant_A(dim));
}
BENCHMARK(BM_ShapeConstant)->DenseRange(3, 6);

void BM_RefinedConstant(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bistat::refined_constant_ctilde(3));
}
BENCHMARK(BM_RefinedConstant);

}  // namespace

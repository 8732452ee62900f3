#include <benchmark/benchmark.h>

#include <bistat/profiles.hpp>
#include <bistat/radial.hpp>

namespace {

void BM_FluxGradientMagnitude(benchmark::State& state) {
  const auto table = bistat::taylor_coefficients(static_cast<int>(state.range(0)));
  double r = 1e-6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bistat::flux_gradient_magnitude(r, 1.0, table, 3));
    r = r < 1e3 ? r * 1.01 : 1e-6;
  }
}
BENCHMARK(BM_FluxGradientMagnitude)->Arg(2)->Arg(4)->Arg(16)->Arg(64);

void BM_ApproxProfile(benchmark::State& state) {
  const auto rgrid = bistat::log_spaced(1e-7, 1e3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bistat::approx_radial_profile(1.0, 4, 3, rgrid).samples.data());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ApproxProfile)->Arg(201)->Arg(2001)->Unit(benchmark::kMillisecond);

void BM_ExactProfile(benchmark::State& state) {
  const auto rgrid = bistat::log_spaced(1e-6, 1e3, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(bistat::exact_radial_profile(1.0, 3, rgrid).samples.data());
}
BENCHMARK(BM_ExactProfile)->Unit(benchmark::kMillisecond);

void BM_FitSingularity(benchmark::State& state) {
  const auto profile = bistat::approx_radial_profile(1.0, 4, 3, bistat::log_spaced(1e-7, 1e3, 2001));
  for (auto _ : state) benchmark::DoNotOptimize(bistat::fit_singularity(profile).u.exponent);
}
BENCHMARK(BM_FitSingularity);

}  // namespace

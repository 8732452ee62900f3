#include <benchmark/benchmark.h>

#include <bistat/energy.hpp>
#include <bistat/field.hpp>

namespace {

bistat::DiscreteProblem problem(double h, int m) {
  bistat::ChargeConfig config(3, {bistat::PointCharge{{0.0, 0.0, 0.0}, 1.0}});
  return bistat::assemble_problem(config, bistat::Box::cube(2.0), h, m, bistat::BoundaryRule::Zero);
}

// Lattice sizes 17^3 and 33^3.
double spacing(const benchmark::State& state) { return 4.0 / static_cast<double>(state.range(0) - 1); }

void BM_Energy(benchmark::State& state) {
  const auto p = problem(spacing(state), 4);
  const auto u = bistat::perturbed_initial_guess(p, 1, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(bistat::discrete_energy(p, u));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.shape.node_count()));
}
BENCHMARK(BM_Energy)->Arg(17)->Arg(33);

void BM_Gradient(benchmark::State& state) {
  const auto p = problem(spacing(state), 4);
  const auto u = bistat::perturbed_initial_guess(p, 1, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(bistat::energy_gradient(p, u).data());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.shape.node_count()));
}
BENCHMARK(BM_Gradient)->Arg(17)->Arg(33);

void BM_HessianApply(benchmark::State& state) {
  const auto p = problem(spacing(state), 4);
  const auto u = bistat::perturbed_initial_guess(p, 1, 0.1);
  const auto v = bistat::perturbed_initial_guess(p, 2, 1.0);
  std::vector<double> out(u.size());
  for (auto _ : state) {
    bistat::hessian_apply(p, u, v, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.shape.node_count()));
}
BENCHMARK(BM_HessianApply)->Arg(17)->Arg(33);

void BM_Minimize(benchmark::State& state) {
  const auto p = problem(spacing(state), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(bistat::minimize_energy(p).energy);
}
BENCHMARK(BM_Minimize)->Args({17, 2})->Args({33, 2})->Args({33, 8})->Unit(benchmark::kMillisecond);

}  // namespace

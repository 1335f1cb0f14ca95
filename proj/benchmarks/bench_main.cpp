#include <benchmark/benchmark.h>

#include "mwvc/central.hpp"
#include "mwvc/generate.hpp"
#include "mwvc/mpc.hpp"
#include "mwvc/oracle.hpp"

namespace {

mwvc::GenSpec gnp_spec(std::size_t n, double deg) {
  mwvc::GenSpec s;
  s.num_vertices = n;
  s.target_avg_degree = deg;
  s.weights = mwvc::WeightDist::uniform(1, 2);
  s.seed = 1;
  return s;
}

void BM_GenerateGnp(benchmark::State& state) {
  const auto spec = gnp_spec(static_cast<std::size_t>(state.range(0)), 64);
  for (auto _ : state) benchmark::DoNotOptimize(mwvc::generate(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 32);
}
BENCHMARK(BM_GenerateGnp)->Arg(1 << 12)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

void BM_Central(benchmark::State& state) {
  const auto g = mwvc::generate(gnp_spec(static_cast<std::size_t>(state.range(0)), 64));
  for (auto _ : state) benchmark::DoNotOptimize(mwvc::run_centralized(g, 0.1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_edges()));
}
BENCHMARK(BM_Central)->Arg(1 << 12)->Arg(1 << 14)->Unit(benchmark::kMillisecond);

void BM_Mpc(benchmark::State& state) {
  const auto g = mwvc::generate(gnp_spec(4096, static_cast<double>(state.range(0))));
  auto config = mwvc::MpcConfig::practical(0.1, 1);
  config.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(mwvc::run_mpc(g, config));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_edges()));
}
BENCHMARK(BM_Mpc)->Args({64, 1})->Args({256, 1})->Args({256, 4})->Unit(benchmark::kMillisecond);

void BM_Exact(benchmark::State& state) {
  mwvc::GenSpec s = gnp_spec(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(mwvc::exact_mwvc(mwvc::generate(s)));
}
BENCHMARK(BM_Exact)->Arg(18)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "preorder/generator.hpp"
#include "preorder/max_flow.hpp"
#include "preorder/partial.hpp"
#include "preorder/pipeline.hpp"

namespace {

using namespace preorder;

void BM_MinCut(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Random rng(1);
  FlowNetwork net(n, 0, n - 1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && rng.uniform() < 0.5) net.add_arc(a, b, rng.uniform());
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(min_st_cut(net).value);
}
BENCHMARK(BM_MinCut)->Arg(20)->Arg(40)->Arg(80);

void BM_Closure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Random rng(2);
  const Relation truth = generate_ground_truth(n, 0.5, rng);
  PartialAssignment x(n);
  for (Element p = 0; p < n; ++p) {
    for (Element q = 0; q < n; ++q) {
      if (p != q && rng.uniform() < 0.1) x.fix(p, q, truth.get(p, q));
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(close(x).decided_count());
}
BENCHMARK(BM_Closure)->Arg(20)->Arg(40)->Arg(80);

void BM_RunJoint(benchmark::State& state) {
  GeneratorConfig cfg;
  cfg.n = static_cast<std::size_t>(state.range(0));
  cfg.edge_density = 0.5;
  cfg.alpha = static_cast<double>(state.range(1)) / 100.0;
  cfg.seed = 3;
  const Instance inst = generate_synthetic(cfg).first;
  for (auto _ : state) benchmark::DoNotOptimize(run_joint(inst).stats.percent_fixed);
}
BENCHMARK(BM_RunJoint)->Args({20, 50})->Args({20, 90})->Args({40, 50})->Args({40, 90})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

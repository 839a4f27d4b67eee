#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include <artinsigma/chi_analysis.hpp>
#include <artinsigma/flag_homology.hpp>
#include <artinsigma/graph.hpp>
#include <artinsigma/link_conditions.hpp>
#include <artinsigma/salvetti.hpp>

using namespace artinsigma;

namespace {

// Erdos-Renyi graph, all labels 2 except a matching of label 4 edges, so the
// result is always even and FC.
EvenGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({ids[i], ids[j], (j == i + 1 && i % 2 == 0) ? 4 : 2});
  return EvenGraph(ids, edges);
}

Character alternating(const EvenGraph& g) {
  std::vector<Rational> vals;
  for (std::size_t i = 0; i < g.size(); ++i) vals.emplace_back(i % 2 ? -1 : 1);
  return Character(g, vals);
}

void BM_EnumerateCliques(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cliques(g, g.size()));
}
BENCHMARK(BM_EnumerateCliques)->Arg(12)->Arg(20)->Arg(28);

void BM_IntegerHomology(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.45, 11);
  const auto cx = flag_complex(g);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(cx, Coefficients::integers(), 3));
}
BENCHMARK(BM_IntegerHomology)->Arg(8)->Arg(12)->Arg(16);

void BM_StrongLinkCondition(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 3);
  const auto chi = alternating(g);
  for (auto _ : state) benchmark::DoNotOptimize(strong_n_link(g, chi, 2));
}
BENCHMARK(BM_StrongLinkCondition)->Arg(6)->Arg(9)->Arg(12);

// Full Smith form over F_p[t, t^-1] against the closed-form free rank.
void BM_SalvettiCrossCheck(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.6, 5);
  const auto chi = alternating(g);
  for (auto _ : state) benchmark::DoNotOptimize(cross_check(g, chi, 2, 2));
}
BENCHMARK(BM_SalvettiCrossCheck)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "algconn/canonical.hpp"
#include "algconn/enumeration.hpp"
#include "algconn/families.hpp"
#include "algconn/rewiring.hpp"
#include "algconn/spectra.hpp"
#include "algconn/verify.hpp"

using namespace algconn;

namespace {

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return graph_from_edges(n, edges);
}

void BM_LaplacianSpectrum(benchmark::State& state) {
  const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(laplacian_spectrum(g));
}
BENCHMARK(BM_LaplacianSpectrum)->Arg(8)->Arg(30)->Arg(100);

void BM_FiedlerCycle(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fiedler_vector(g));
}
BENCHMARK(BM_FiedlerCycle)->Arg(40)->Arg(100);

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(12);

void BM_CanonicalFormRegular(benchmark::State& state) {
  const Graph g = complete_bipartite_graph(6, 6);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormRegular);

void BM_EnumerateBiconnected(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_classes(n, Predicate::Biconnected));
}
BENCHMARK(BM_EnumerateBiconnected)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Rewire(benchmark::State& state) {
  const Graph g = realize({FamilyKind::ThetaLengths, 12, {3, 5, 5}});
  const FiedlerResult f = fiedler_vector(g);
  for (auto _ : state) benchmark::DoNotOptimize(rewire(g, f));
}
BENCHMARK(BM_Rewire);

void BM_VerifyTheorem1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_1(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_VerifyTheorem1)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

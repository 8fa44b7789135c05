#include <benchmark/benchmark.h>

#include "algstat/ci.hpp"
#include "algstat/gaussian.hpp"
#include "algstat/implicit.hpp"
#include "algstat/phylo.hpp"

using namespace algstat;

namespace {

Graph cycle4() { return graph_from_edges(GraphKind::Undirected, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

Graph dag6() {
  std::vector<std::pair<Vertex, Vertex>> e{{1, 3}, {1, 4}, {2, 3}, {2, 4}, {4, 5}};
  for (Vertex i = 1; i <= 5; ++i) e.emplace_back(i, 6);
  return graph_from_edges(GraphKind::Directed, e);
}

PhyloNetwork star3() { return phylo_validate(graph_from_edges(GraphKind::Directed, {{4, 1}, {4, 2}, {4, 3}})); }

PhyloNetwork sunlet4() {
  return phylo_validate(
      graph_from_edges(GraphKind::Directed, {{5, 1}, {6, 5}, {7, 6}, {7, 8}, {8, 5}, {6, 2}, {7, 3}, {8, 4}}));
}

void BM_FourCycleElimination(benchmark::State& state) {
  GaussianModel m(cycle4());
  for (auto _ : state) benchmark::DoNotOptimize(vanishing_ideal(m));
}
BENCHMARK(BM_FourCycleElimination)->Unit(benchmark::kMillisecond);

void BM_FourCycleCIIdeal(benchmark::State& state) {
  GaussianRing r(4);
  auto stmts = global_markov(cycle4());
  for (auto _ : state) benchmark::DoNotOptimize(ci_ideal(r, stmts).groebner_basis());
}
BENCHMARK(BM_FourCycleCIIdeal)->Unit(benchmark::kMillisecond);

void BM_DagSaturation(benchmark::State& state) {
  GaussianModel m(dag6());
  for (auto _ : state) benchmark::DoNotOptimize(vanishing_ideal(m, {GaussianAlgorithm::Saturate}));
}
BENCHMARK(BM_DagSaturation)->Unit(benchmark::kMillisecond);

void BM_JukesCantorToric(benchmark::State& state) {
  PhyloModel m(star3(), PhyloKind::JukesCantor);
  for (auto _ : state) benchmark::DoNotOptimize(vanishing_ideal(m, CoordSpace::Fourier));
}
BENCHMARK(BM_JukesCantorToric)->Unit(benchmark::kMillisecond);

void BM_JukesCantorProbabilityElimination(benchmark::State& state) {
  PhyloModel m(star3(), PhyloKind::JukesCantor);
  for (auto _ : state) benchmark::DoNotOptimize(vanishing_ideal(m, CoordSpace::Probability));
}
BENCHMARK(BM_JukesCantorProbabilityElimination)->Unit(benchmark::kMillisecond);

void BM_Kimura3SunletDegree2(benchmark::State& state) {
  RingMap phi = PhyloModel(sunlet4(), PhyloKind::Kimura3).fourier_parametrization();
  ImplicitOptions opts{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(components_of_kernel(2, phi, opts));
}
BENCHMARK(BM_Kimura3SunletDegree2)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long>((i * 7 + j * 13 + i * j) % 11) - 5;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(24);

}  // namespace

BENCHMARK_MAIN();

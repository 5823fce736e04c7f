// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "lpa/conditions.hpp"
#include "lpa/io.hpp"
#include "lpa/serial_reference.hpp"
#include "support/random_graphs.hpp"

namespace {

using namespace lpa;

// Sparse graph on n vertices: a chain with a few back edges and loops, so the
// lattice of hereditary saturated sets is large.
Graph chain_graph(int n, double infinite_rate) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n));
  GraphSpec spec;
  for (int i = 0; i < n; ++i) spec.vertices.push_back("x" + std::to_string(i));
  int edge = 0;
  auto add = [&](int s, int r) {
    spec.edges.push_back({"e" + std::to_string(edge++), spec.vertices[s], spec.vertices[r]});
  };
  for (int i = 0; i + 1 < n; ++i) add(i, i + 1);
  for (int i = 0; i < n; i += 3) add(i, i);
  for (int i = 2; i < n; i += 4) add(i, static_cast<int>(rng() % static_cast<unsigned>(i)));
  std::bernoulli_distribution infinite(infinite_rate);
  for (int i = 0; i + 2 < n; ++i) {
    if (infinite(rng)) spec.infinite.push_back({spec.vertices[i], {spec.vertices[n - 1]}});
  }
  return Graph::from_spec(spec);
}

Graph graph_with_L(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    auto g = testing::random_graph(rng, {.max_vertices = 6, .max_edges = 10});
    if (g.explicit_edge_count() > 3 && check_condition_L(g).holds) return g;
  }
}

template <bool Parallel>
void BM_EnumerateHereditarySaturated(benchmark::State& state) {
  auto g = chain_graph(static_cast<int>(state.range(0)), 0.0);
  for (auto _ : state) {
    auto sets = Parallel ? enumerate_hereditary_saturated(g, 30) : serial::enumerate_hereditary_saturated(g, 30);
    benchmark::DoNotOptimize(sets);
  }
}

template <bool Parallel>
void BM_QuotientSurvey(benchmark::State& state) {
  auto g = chain_graph(static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) {
    auto survey = Parallel ? quotient_survey(g, 30) : serial::quotient_survey(g, 30);
    benchmark::DoNotOptimize(survey);
  }
}

template <bool Parallel>
void BM_CanonicalSearch(benchmark::State& state) {
  Algebra alg(graph_with_L(5), Field::rationals());
  std::mt19937_64 rng(9);
  std::vector<Element> elements;
  while (elements.size() < 20) {
    auto a = random_element(alg, rng);
    if (!a.is_zero()) elements.push_back(a);
  }
  for (auto _ : state) {
    for (const auto& a : elements) {
      auto level = default_max_len(alg, a);
      auto r = Parallel ? canonical_search(alg, a, level, 1500) : serial::canonical_search(alg, a, level, 1500);
      benchmark::DoNotOptimize(r);
    }
  }
}

template <bool Parallel>
void BM_VerifyTheorem1(benchmark::State& state) {
  Algebra alg(graph_with_L(11), Field::prime(5));
  const auto trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto report = Parallel ? verify_theorem1(alg, trials, 1) : serial::verify_theorem1(alg, trials, 1);
    benchmark::DoNotOptimize(report);
  }
}

}  // namespace

BENCHMARK(BM_EnumerateHereditarySaturated<false>)->Name("hsat/serial")->Arg(12)->Arg(16);
BENCHMARK(BM_EnumerateHereditarySaturated<true>)->Name("hsat/parallel")->Arg(12)->Arg(16);
BENCHMARK(BM_QuotientSurvey<false>)->Name("survey/serial")->Arg(10)->Arg(12);
BENCHMARK(BM_QuotientSurvey<true>)->Name("survey/parallel")->Arg(10)->Arg(12);
BENCHMARK(BM_CanonicalSearch<false>)->Name("search/serial");
BENCHMARK(BM_CanonicalSearch<true>)->Name("search/parallel");
BENCHMARK(BM_VerifyTheorem1<false>)->Name("theorem1/serial")->Arg(200);
BENCHMARK(BM_VerifyTheorem1<true>)->Name("theorem1/parallel")->Arg(200);

BENCHMARK_MAIN();

#pragma once

#include <random>
#include <string>

#include "lpa/graph.hpp"

namespace lpa::testing {

struct GraphShape {
  int max_vertices = 6;
  int max_edges = 10;
  /// Probability that a vertex becomes an infinite emitter.
  double infinite_rate = 0.0;
};

inline GraphSpec random_graph_spec(std::mt19937_64& rng, const GraphShape& shape = {}) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  GraphSpec spec;
  const int n = uniform(1, shape.max_vertices);
  for (int i = 0; i < n; ++i) spec.vertices.push_back(std::string(1, static_cast<char>('a' + i)));
  const int m = uniform(0, shape.max_edges);
  for (int i = 0; i < m; ++i) {
    spec.edges.push_back({std::string(1, static_cast<char>('m' + i)), spec.vertices[uniform(0, n - 1)],
                          spec.vertices[uniform(0, n - 1)]});
  }
  std::bernoulli_distribution infinite(shape.infinite_rate);
  for (const auto& v : spec.vertices) {
    if (!infinite(rng)) continue;
    InfiniteSpec inf{v, {}};
    for (const auto& w : spec.vertices) {
      if (uniform(0, 2) == 0) inf.targets.push_back(w);
    }
    if (inf.targets.empty()) inf.targets.push_back(spec.vertices[uniform(0, n - 1)]);
    spec.infinite.push_back(std::move(inf));
  }
  return spec;
}

inline Graph random_graph(std::mt19937_64& rng, const GraphShape& shape = {}) {
  return Graph::from_spec(random_graph_spec(rng, shape));
}

}  // namespace lpa::testing

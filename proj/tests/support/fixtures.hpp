#pragma once

#include <string>

#include "lpa/algebra.hpp"
#include "lpa/graph.hpp"

namespace lpa::testing {

inline Graph toeplitz() { return Graph::from_spec({{"v", "w"}, {{"c", "v", "v"}, {"e", "v", "w"}}, {}}); }
inline Graph single_loop() { return Graph::from_spec({{"v"}, {{"c", "v", "v"}}, {}}); }
inline Graph rose() { return Graph::from_spec({{"v"}, {{"g", "v", "v"}, {"h", "v", "v"}}, {}}); }
inline Graph fan() { return Graph::from_spec({{"v", "w"}, {{"e", "v", "w"}, {"f", "v", "w"}}, {}}); }
inline Graph breaking_graph() {
  return Graph::from_spec({{"u", "v", "w"}, {{"d", "u", "v"}}, {{"u", {"w"}}}});
}

/// v0 -> v1 -> ... -> v{n-1} with edges e1..e{n-1}.
inline Graph line_graph(int n) {
  GraphSpec spec;
  for (int i = 0; i < n; ++i) spec.vertices.push_back("v" + std::to_string(i));
  for (int i = 1; i < n; ++i) {
    spec.edges.push_back({"e" + std::to_string(i), "v" + std::to_string(i - 1), "v" + std::to_string(i)});
  }
  return Graph::from_spec(spec);
}

inline VertexIndex vid(const Graph& g, const std::string& name) { return *g.find_vertex(name); }
inline EdgeIndex eid(const Graph& g, const std::string& name) { return *g.find_edge(name); }

}  // namespace lpa::testing

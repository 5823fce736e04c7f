#pragma once

// Brute-force reference computations. They share no code with the library
// beyond the Graph accessors.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa::testing {

/// Every vertex-simple closed path, as a vertex sequence starting at its least
/// vertex. Infinite fans count as edges.
inline std::vector<std::vector<VertexIndex>> all_cycles(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::set<VertexIndex>> succ(n);
  for (VertexIndex v = 0; v < n; ++v) {
    for (auto e : g.out_edges(v)) succ[v].insert(g.range(e));
    for (auto t : g.infinite_targets(v)) succ[v].insert(t);
  }
  std::vector<std::vector<VertexIndex>> out;
  std::vector<VertexIndex> stack;
  std::vector<bool> used(n, false);
  std::function<void(VertexIndex, VertexIndex)> dfs = [&](VertexIndex start, VertexIndex at) {
    for (auto w : succ[at]) {
      if (w == start) out.push_back(stack);
      if (w > start && !used[w]) {
        used[w] = true;
        stack.push_back(w);
        dfs(start, w);
        stack.pop_back();
        used[w] = false;
      }
    }
  };
  for (VertexIndex s = 0; s < n; ++s) {
    stack = {s};
    used.assign(n, false);
    used[s] = true;
    dfs(s, s);
  }
  return out;
}

/// Whether some vertex of the cycle emits something besides its cycle edge.
inline bool cycle_has_exit(const Graph& g, const std::vector<VertexIndex>& cycle) {
  for (auto v : cycle) {
    if (g.is_infinite_emitter(v) || g.out_edges(v).size() != 1) return true;
  }
  return false;
}

/// Closed paths at v that return to v only at the end, up to `max_len` edges,
/// capped at `limit` results. An infinite fan on the way makes the count
/// unbounded, reported as `limit`.
inline std::size_t count_closed_paths_bounded(const Graph& g, VertexIndex v, std::size_t max_len,
                                              std::size_t limit = 2) {
  // Prune walks that can no longer return to v.
  std::vector<bool> returns(g.vertex_count(), false);
  returns[v] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
      if (returns[u]) continue;
      bool any = false;
      for (auto e : g.out_edges(u)) any = any || returns[g.range(e)];
      for (auto t : g.infinite_targets(u)) any = any || returns[t];
      if (any) returns[u] = changed = true;
    }
  }
  std::size_t count = 0;
  std::function<void(VertexIndex, std::size_t)> walk = [&](VertexIndex at, std::size_t len) {
    if (count >= limit || len == max_len || !returns[at]) return;
    for (auto e : g.out_edges(at)) {
      if (g.range(e) == v) {
        ++count;
      } else {
        walk(g.range(e), len + 1);
      }
    }
    // Infinitely many parallel edges: any closed completion through them is unbounded.
    for (auto t : g.infinite_targets(at)) {
      const auto before = count;
      if (t == v) {
        ++count;
      } else {
        walk(t, len + 1);
      }
      if (count > before) count = limit;
    }
  };
  walk(v, 0);
  return std::min(count, limit);
}

}  // namespace lpa::testing

#include "lpa/conditions.hpp"

#include <deque>

#include "lpa/error.hpp"
#include "lpa/ideal_lattice.hpp"

namespace lpa {

namespace {

// Closed-path search space at v: intermediate vertices that are reachable from
// v without passing through v, and that can reach v without passing through v.
std::vector<bool> closed_path_support(const Graph& g, VertexIndex v) {
  const auto n = g.vertex_count();
  std::vector<bool> fwd(n, false), bwd(n, false);
  std::deque<VertexIndex> queue;

  auto push_fwd = [&](VertexIndex w) {
    if (w != v && !fwd[w]) {
      fwd[w] = true;
      queue.push_back(w);
    }
  };
  for (auto e : g.out_edges(v)) push_fwd(g.range(e));
  for (auto t : g.infinite_targets(v)) push_fwd(t);
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto e : g.out_edges(x)) push_fwd(g.range(e));
    for (auto t : g.infinite_targets(x)) push_fwd(t);
  }

  // Reverse adjacency including the infinite fan.
  std::vector<std::vector<VertexIndex>> preds(n);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (!g.is_phantom(e)) preds[g.range(e)].push_back(g.source(e));
  }
  for (VertexIndex u = 0; u < n; ++u) {
    for (auto t : g.infinite_targets(u)) preds[t].push_back(u);
  }
  auto push_bwd = [&](VertexIndex w) {
    if (w != v && !bwd[w]) {
      bwd[w] = true;
      queue.push_back(w);
    }
  };
  for (auto p : preds[v]) push_bwd(p);
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto p : preds[x]) push_bwd(p);
  }

  std::vector<bool> support(n, false);
  for (VertexIndex w = 0; w < n; ++w) support[w] = fwd[w] && bwd[w];
  return support;
}

// First `want` closed paths at v in (length, lexicographic) order, searching
// only through `support`. Every partial path there extends to a closed one,
// so the breadth-first frontier cannot stall.
std::vector<Path> first_closed_paths(const Graph& g, VertexIndex v, const std::vector<bool>& support,
                                     std::size_t want) {
  std::vector<Path> found;
  std::vector<Path> frontier{trivial_path(v)};
  constexpr std::size_t frontier_limit = 1 << 16;
  while (!frontier.empty() && found.size() < want) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (auto e : g.algebra_out_edges(path_range(g, p))) {
        auto r = g.range(e);
        if (r != v && !support[r]) continue;
        Path q = p;
        q.edges.push_back(e);
        if (r == v) {
          found.push_back(std::move(q));
          if (found.size() == want) return found;
        } else if (next.size() < frontier_limit) {
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return found;
}

}  // namespace

CycleWitness cycle_witness(const Graph& g, const Cycle& c) {
  return CycleWitness{g.vertex_name(c.base()), edge_names(g, c.path)};
}

ConditionReport check_condition_L(const Graph& g) {
  ConditionReport report{'L', ConditionMethod::Direct, true, {}};
  if (auto cycle = find_exitless_cycle(g)) {
    report.holds = false;
    report.witness = cycle_witness(g, *cycle);
  }
  return report;
}

SimpleClosedPathCount count_simple_closed_paths(const Graph& g, VertexIndex v) {
  using Kind = SimpleClosedPathCount::Kind;
  if (v >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  const auto n = g.vertex_count();
  const auto support = closed_path_support(g, v);
  auto useful = [&](VertexIndex w) { return w == v || support[w]; };

  bool infinite = false;
  for (auto t : g.infinite_targets(v)) infinite = infinite || useful(t);
  for (VertexIndex x = 0; x < n && !infinite; ++x) {
    if (!support[x]) continue;
    for (auto t : g.infinite_targets(x)) infinite = infinite || useful(t);
  }

  // Cycle among intermediate vertices, or a count of v_out -> v_in routes.
  bool cyclic = false;
  std::vector<std::uint8_t> state(n, 0);
  std::vector<std::uint64_t> routes(n, 0);  // saturating at 2
  auto visit = [&](auto&& self, VertexIndex x) -> std::uint64_t {
    if (state[x] == 2) return routes[x];
    if (state[x] == 1) {
      cyclic = true;
      return 2;
    }
    state[x] = 1;
    std::uint64_t total = 0;
    for (auto e : g.out_edges(x)) {
      auto r = g.range(e);
      if (r == v) {
        total += 1;
      } else if (support[r]) {
        total += self(self, r);
      }
      total = std::min<std::uint64_t>(total, 2);
    }
    state[x] = 2;
    routes[x] = total;
    return total;
  };
  std::uint64_t total = 0;
  if (!infinite) {
    for (auto e : g.out_edges(v)) {
      auto r = g.range(e);
      total += r == v ? 1 : (support[r] ? visit(visit, r) : 0);
      total = std::min<std::uint64_t>(total, 2);
    }
  }

  SimpleClosedPathCount out;
  if (infinite || cyclic || total >= 2) {
    out.kind = Kind::TwoOrMore;
    out.paths = first_closed_paths(g, v, support, 2);
  } else if (total == 1) {
    out.kind = Kind::One;
    out.paths = first_closed_paths(g, v, support, 1);
  }
  return out;
}

ConditionReport check_condition_K_direct(const Graph& g) {
  ConditionReport report{'K', ConditionMethod::Direct, true, {}};
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    auto count = count_simple_closed_paths(g, v);
    if (count.kind == SimpleClosedPathCount::Kind::One) {
      report.holds = false;
      report.witness = SinglePathWitness{g.vertex_name(v), edge_names(g, count.paths.front())};
      break;
    }
  }
  return report;
}

ConditionReport check_condition_K_via_quotients(const Graph& g, std::size_t cap) {
  ConditionReport report{'K', ConditionMethod::Quotients, true, {}};
  for (auto& entry : quotient_survey(g, cap)) {
    if (entry.report.holds) continue;
    report.holds = false;
    QuotientWitness w;
    for (auto v : entry.pair.hereditary) w.hereditary.push_back(g.vertex_name(v));
    for (auto v : entry.pair.breaking) w.breaking.push_back(g.vertex_name(v));
    w.cycle = std::get<CycleWitness>(entry.report.witness);
    report.witness = std::move(w);
    break;
  }
  return report;
}

}  // namespace lpa

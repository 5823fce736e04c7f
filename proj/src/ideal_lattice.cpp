#include "lpa/ideal_lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "lpa/error.hpp"
#include "kernel_support.hpp"

namespace lpa {

namespace {

std::vector<bool> membership(const Graph& g, const VertexSet& h) {
  std::vector<bool> in(g.vertex_count(), false);
  for (auto v : h) {
    if (v >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
    in[v] = true;
  }
  return in;
}

VertexSet to_set(const std::vector<bool>& in) {
  VertexSet out;
  for (VertexIndex v = 0; v < in.size(); ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

namespace detail {

VertexSet subset_from_mask(const VertexSet& universe, std::uint64_t mask) {
  VertexSet out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (mask >> i & 1) out.push_back(universe[i]);
  }
  return out;
}

SurveyEntry survey_entry(const Graph& g, const AdmissiblePair& pair) {
  return {pair, check_condition_L(quotient_graph(g, pair.hereditary, pair.breaking).graph)};
}

void require_within_cap(const Graph& g, std::size_t cap) {
  if (g.vertex_count() > cap || g.vertex_count() > 30) {
    throw Error(ErrorCode::GraphTooLarge,
                "graph has " + std::to_string(g.vertex_count()) + " vertices; enumeration cap is " + std::to_string(cap),
                {{"vertices", g.vertex_count()}, {"cap", cap}});
  }
}

}  // namespace detail

namespace {

bool hereditary_saturated(const Graph& g, const VertexSet& h) { return is_hereditary(g, h) && is_saturated(g, h); }

}  // namespace

bool canonical_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool is_hereditary(const Graph& g, const VertexSet& h) {
  auto in = membership(g, h);
  for (auto v : h) {
    for (auto e : g.out_edges(v)) {
      if (!in[g.range(e)]) return false;
    }
    for (auto t : g.infinite_targets(v)) {
      if (!in[t]) return false;
    }
  }
  return true;
}

bool is_saturated(const Graph& g, const VertexSet& h) {
  auto in = membership(g, h);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (in[v] || !g.is_regular(v)) continue;
    auto edges = g.out_edges(v);
    if (std::all_of(edges.begin(), edges.end(), [&](EdgeIndex e) { return in[g.range(e)]; })) return false;
  }
  return true;
}

VertexSet hereditary_saturated_closure(const Graph& g, const VertexSet& seed) {
  auto in = membership(g, seed);
  std::deque<VertexIndex> queue(seed.begin(), seed.end());
  auto reach = [&](VertexIndex w) {
    if (!in[w]) {
      in[w] = true;
      queue.push_back(w);
    }
  };
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto e : g.out_edges(v)) reach(g.range(e));
    for (auto t : g.infinite_targets(v)) reach(t);
  }
  // Saturation; a vertex added here already has every child inside, so the
  // set stays hereditary.
  for (bool changed = true; changed;) {
    changed = false;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (in[v] || !g.is_regular(v)) continue;
      auto edges = g.out_edges(v);
      if (std::all_of(edges.begin(), edges.end(), [&](EdgeIndex e) { return in[g.range(e)]; })) {
        in[v] = true;
        changed = true;
      }
    }
  }
  return to_set(in);
}

std::vector<VertexSet> enumerate_hereditary_saturated(const Graph& g, std::size_t cap) {
  detail::require_within_cap(g, cap);
  const auto n = g.vertex_count();
  VertexSet all(n);
  for (VertexIndex v = 0; v < n; ++v) all[v] = v;
  const std::int64_t masks = std::int64_t{1} << n;

  std::set<VertexSet> found;
#pragma omp parallel
  {
    std::set<VertexSet> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t mask = 0; mask < masks; ++mask) {
      local.insert(hereditary_saturated_closure(g, detail::subset_from_mask(all, static_cast<std::uint64_t>(mask))));
    }
#pragma omp critical(lpa_hsat_merge)
    found.merge(local);
  }
  std::vector<VertexSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

VertexSet breaking_vertices(const Graph& g, const VertexSet& h) {
  if (!hereditary_saturated(g, h)) {
    throw Error(ErrorCode::InvalidSubset, "set is not hereditary and saturated");
  }
  auto in = membership(g, h);
  VertexSet out;
  for (VertexIndex w = 0; w < g.vertex_count(); ++w) {
    if (in[w] || !g.is_infinite_emitter(w)) continue;
    auto targets = g.infinite_targets(w);
    if (!std::all_of(targets.begin(), targets.end(), [&](VertexIndex t) { return in[t]; })) continue;
    auto edges = g.out_edges(w);
    if (std::any_of(edges.begin(), edges.end(), [&](EdgeIndex e) { return !in[g.range(e)]; })) out.push_back(w);
  }
  return out;
}

Element breaking_vertex_element(const Algebra& alg, const VertexSet& h, VertexIndex v) {
  const auto& g = alg.graph();
  auto breaking = breaking_vertices(g, h);
  if (!std::binary_search(breaking.begin(), breaking.end(), v)) {
    throw Error(ErrorCode::NotABreakingVertex,
                "'" + (v < g.vertex_count() ? g.vertex_name(v) : std::string("?")) + "' is not a breaking vertex");
  }
  auto in = membership(g, h);
  Element out = alg.vertex(v);
  for (auto e : g.out_edges(v)) {
    if (in[g.range(e)]) continue;
    Path p{v, {e}};
    out = alg.subtract(out, alg.monomial(p, p, alg.field().one()));
  }
  return alg.normal_form(out);
}

QuotientGraph quotient_graph(const Graph& g, const VertexSet& h, const VertexSet& s) {
  for (auto v : h) {
    if (v >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  }
  if (!hereditary_saturated(g, h)) {
    throw Error(ErrorCode::InvalidAdmissiblePair, "H is not hereditary and saturated");
  }
  const auto breaking = breaking_vertices(g, h);
  for (auto v : s) {
    if (!std::binary_search(breaking.begin(), breaking.end(), v)) {
      throw Error(ErrorCode::InvalidAdmissiblePair, "S is not contained in the breaking vertices of H");
    }
  }
  const auto in = membership(g, h);
  std::vector<bool> primed(g.vertex_count(), false);  // B_H \ S
  for (auto v : breaking) primed[v] = !std::binary_search(s.begin(), s.end(), v);

  const auto original = g.to_spec();
  std::set<std::string> taken(original.vertices.begin(), original.vertices.end());
  for (const auto& e : original.edges) taken.insert(e.name);
  auto fresh_prime = [&](const std::string& name) {
    std::string out = name + "'";
    while (taken.contains(out)) out += "'";
    taken.insert(out);
    return out;
  };

  QuotientGraph q;
  GraphSpec spec;
  std::vector<std::string> prime_name(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (!in[v]) spec.vertices.push_back(g.vertex_name(v));
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (!primed[v]) continue;
    prime_name[v] = fresh_prime(g.vertex_name(v));
    spec.vertices.push_back(prime_name[v]);
    q.primed_vertices[prime_name[v]] = g.vertex_name(v);
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (g.is_phantom(e)) continue;
    if (!in[g.range(e)]) spec.edges.push_back({g.edge_name(e), g.vertex_name(g.source(e)), g.vertex_name(g.range(e))});
  }
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (g.is_phantom(e) || !primed[g.range(e)]) continue;
    auto name = fresh_prime(g.edge_name(e));
    spec.edges.push_back({name, g.vertex_name(g.source(e)), prime_name[g.range(e)]});
    q.primed_edges[name] = g.edge_name(e);
  }
  for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
    if (in[u] || !g.is_infinite_emitter(u)) continue;
    InfiniteSpec inf{g.vertex_name(u), {}};
    for (auto t : g.infinite_targets(u)) {
      if (!in[t]) inf.targets.push_back(g.vertex_name(t));
      if (primed[t]) inf.targets.push_back(prime_name[t]);
    }
    if (!inf.targets.empty()) spec.infinite.push_back(std::move(inf));
  }
  q.graph = Graph::from_spec(spec, /*allow_empty=*/true);
  return q;
}

std::vector<AdmissiblePair> admissible_pairs(const Graph& g, std::size_t cap) {
  std::vector<AdmissiblePair> out;
  for (auto& h : enumerate_hereditary_saturated(g, cap)) {
    auto breaking = breaking_vertices(g, h);
    std::vector<VertexSet> subsets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << breaking.size()); ++mask) {
      subsets.push_back(detail::subset_from_mask(breaking, mask));
    }
    std::sort(subsets.begin(), subsets.end(), canonical_less);
    for (auto& s : subsets) out.push_back({h, std::move(s)});
  }
  return out;
}

std::vector<SurveyEntry> quotient_survey(const Graph& g, std::size_t cap) {
  const auto pairs = admissible_pairs(g, cap);
  std::vector<SurveyEntry> out(pairs.size());
  const auto count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = detail::survey_entry(g, pairs[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace lpa

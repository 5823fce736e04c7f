#include "lpa/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lpa/error.hpp"

namespace lpa {

namespace {

void require_identifier(const std::string& name, std::string_view what) {
  if (name.empty()) throw Error(ErrorCode::SyntaxError, std::string(what) + " identifier must be nonempty");
}

}  // namespace

void validate_graph(const GraphSpec& spec, bool allow_empty) {
  if (spec.vertices.empty() && !allow_empty) {
    throw Error(ErrorCode::EmptyVertexSet, "graph has no vertices");
  }
  std::set<std::string_view> vertices;
  for (const auto& v : spec.vertices) {
    require_identifier(v, "vertex");
    if (!vertices.insert(v).second) {
      throw Error(ErrorCode::DuplicateId, "duplicate vertex '" + v + "'", {{"id", v}});
    }
  }
  std::set<std::string_view> edges;
  for (const auto& e : spec.edges) {
    require_identifier(e.name, "edge");
    if (vertices.contains(e.name) || !edges.insert(e.name).second) {
      throw Error(ErrorCode::DuplicateId, "duplicate identifier '" + e.name + "'", {{"id", e.name}});
    }
    for (const auto* end : {&e.source, &e.range}) {
      if (!vertices.contains(*end)) {
        throw Error(ErrorCode::DanglingEndpoint, "edge '" + e.name + "' references unknown vertex '" + *end + "'",
                    {{"edge", e.name}, {"vertex", *end}});
      }
    }
  }
  for (const auto& inf : spec.infinite) {
    if (!vertices.contains(inf.vertex)) {
      throw Error(ErrorCode::DanglingEndpoint, "infinite emitter '" + inf.vertex + "' is not a vertex",
                  {{"vertex", inf.vertex}});
    }
    for (const auto& t : inf.targets) {
      if (!vertices.contains(t)) {
        throw Error(ErrorCode::DanglingEndpoint, "infinite target '" + t + "' is not a vertex", {{"vertex", t}});
      }
    }
  }
}

Graph Graph::from_spec(const GraphSpec& spec, bool allow_empty) {
  validate_graph(spec, allow_empty);
  Graph g;
  g.vertex_names_ = spec.vertices;
  std::sort(g.vertex_names_.begin(), g.vertex_names_.end());
  const auto n = g.vertex_names_.size();

  auto vertex_of = [&](const std::string& name) {
    return static_cast<VertexIndex>(
        std::lower_bound(g.vertex_names_.begin(), g.vertex_names_.end(), name) - g.vertex_names_.begin());
  };

  std::set<std::string> taken(spec.vertices.begin(), spec.vertices.end());
  for (const auto& e : spec.edges) taken.insert(e.name);

  std::map<VertexIndex, std::set<VertexIndex>> infinite;
  for (const auto& inf : spec.infinite) {
    auto& targets = infinite[vertex_of(inf.vertex)];
    for (const auto& t : inf.targets) targets.insert(vertex_of(t));
  }

  std::vector<EdgeRecord> records;
  for (const auto& e : spec.edges) records.push_back({e.name, vertex_of(e.source), vertex_of(e.range), false});
  for (const auto& [u, targets] : infinite) {
    for (auto t : targets) {
      for (int k = 1; k <= phantoms_per_target; ++k) {
        std::string name = g.vertex_names_[u] + "~" + g.vertex_names_[t] + "#" + std::to_string(k);
        while (taken.contains(name)) name += "'";
        taken.insert(name);
        records.push_back({name, u, t, true});
      }
    }
  }
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  g.edges_ = std::move(records);
  g.explicit_edges_ = spec.edges.size();

  g.out_.assign(n, {});
  g.algebra_out_.assign(n, {});
  g.algebra_in_.assign(n, {});
  g.infinite_.assign(n, {});
  for (EdgeIndex e = 0; e < g.edges_.size(); ++e) {
    const auto& rec = g.edges_[e];
    if (!rec.phantom) g.out_[rec.source].push_back(e);
    g.algebra_out_[rec.source].push_back(e);
    g.algebra_in_[rec.range].push_back(e);
  }
  for (const auto& [u, targets] : infinite) g.infinite_[u].assign(targets.begin(), targets.end());

  for (const auto& v : g.vertex_names_) g.single_char_ = g.single_char_ && v.size() == 1;
  for (const auto& e : g.edges_) g.single_char_ = g.single_char_ && e.name.size() == 1;
  return g;
}

GraphSpec Graph::to_spec() const {
  GraphSpec spec;
  spec.vertices = vertex_names_;
  for (const auto& e : edges_) {
    if (!e.phantom) spec.edges.push_back({e.name, vertex_names_[e.source], vertex_names_[e.range]});
  }
  for (VertexIndex v = 0; v < vertex_count(); ++v) {
    if (infinite_[v].empty()) continue;
    InfiniteSpec inf{vertex_names_[v], {}};
    for (auto t : infinite_[v]) inf.targets.push_back(vertex_names_[t]);
    spec.infinite.push_back(std::move(inf));
  }
  return spec;
}

bool Graph::to_spec_equal(const Graph& o) const {
  auto a = to_spec();
  auto b = o.to_spec();
  if (a.vertices != b.vertices || a.edges.size() != b.edges.size() || a.infinite.size() != b.infinite.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    if (a.edges[i].name != b.edges[i].name || a.edges[i].source != b.edges[i].source ||
        a.edges[i].range != b.edges[i].range) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.infinite.size(); ++i) {
    if (a.infinite[i].vertex != b.infinite[i].vertex || a.infinite[i].targets != b.infinite[i].targets) return false;
  }
  return true;
}

std::optional<VertexIndex> Graph::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexIndex>(it - vertex_names_.begin());
}

std::optional<EdgeIndex> Graph::find_edge(std::string_view name) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), name,
                             [](const EdgeRecord& r, std::string_view n) { return r.name < n; });
  if (it == edges_.end() || it->name != name) return std::nullopt;
  return static_cast<EdgeIndex>(it - edges_.begin());
}

Path trivial_path(VertexIndex v) { return Path{v, {}}; }

Path make_path(const Graph& g, std::vector<EdgeIndex> edges) {
  if (edges.empty()) throw Error(ErrorCode::InvalidPath, "make_path needs at least one edge");
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (g.range(edges[i]) != g.source(edges[i + 1])) {
      throw Error(ErrorCode::InvalidPath, "edges '" + g.edge_name(edges[i]) + "' and '" +
                                              g.edge_name(edges[i + 1]) + "' do not compose");
    }
  }
  auto source = g.source(edges.front());
  return Path{source, std::move(edges)};
}

VertexIndex path_range(const Graph& g, const Path& p) {
  return p.edges.empty() ? p.source : g.range(p.edges.back());
}

Path concat(const Graph& g, const Path& a, const Path& b) {
  (void)g;
  if (b.trivial()) return a;
  if (a.trivial()) return b;
  Path out{a.source, a.edges};
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

bool is_prefix(const Path& prefix, const Path& p) {
  if (prefix.source != p.source || prefix.edges.size() > p.edges.size()) return false;
  return std::equal(prefix.edges.begin(), prefix.edges.end(), p.edges.begin());
}

std::vector<std::string> edge_names(const Graph& g, const Path& p) {
  std::vector<std::string> out;
  out.reserve(p.edges.size());
  for (auto e : p.edges) out.push_back(g.edge_name(e));
  return out;
}

std::vector<VertexIndex> regular_vertices(const Graph& g) {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.is_regular(v)) out.push_back(v);
  }
  return out;
}

std::optional<Cycle> exitless_cycle_through(const Graph& g, VertexIndex v) {
  Path p{v, {}};
  VertexIndex at = v;
  for (std::size_t step = 0; step < g.vertex_count(); ++step) {
    if (!g.emits_exactly_one_edge(at)) return std::nullopt;
    auto e = g.out_edges(at).front();
    p.edges.push_back(e);
    at = g.range(e);
    if (at == v) return Cycle{std::move(p)};
  }
  return std::nullopt;
}

std::optional<Cycle> find_exitless_cycle(const Graph& g) {
  // Cycles of the functional subgraph on out-degree-one vertices.
  const auto n = g.vertex_count();
  enum : std::uint8_t { fresh, active, finished };
  std::vector<std::uint8_t> state(n, fresh);
  std::vector<bool> on_cycle(n, false);
  std::vector<VertexIndex> stack;
  for (VertexIndex start = 0; start < n; ++start) {
    if (state[start] != fresh) continue;
    stack.clear();
    VertexIndex at = start;
    while (state[at] == fresh && g.emits_exactly_one_edge(at)) {
      state[at] = active;
      stack.push_back(at);
      at = g.range(g.out_edges(at).front());
    }
    if (state[at] == active) {
      for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        on_cycle[*it] = true;
        if (*it == at) break;
      }
    }
    for (auto v : stack) state[v] = finished;
    if (state[at] == fresh) state[at] = finished;
  }
  for (VertexIndex v = 0; v < n; ++v) {
    if (on_cycle[v]) return exitless_cycle_through(g, v);
  }
  return std::nullopt;
}

}  // namespace lpa

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lpa {

using VertexIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;

struct EdgeSpec {
  std::string name;
  std::string source;
  std::string range;
};

/// `vertex` emits countably many unnamed parallel edges to each target.
struct InfiniteSpec {
  std::string vertex;
  std::vector<std::string> targets;
};

/// Name-level description of a graph, as read from or written to JSON.
struct GraphSpec {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<InfiniteSpec> infinite;
};

/// Throws Error{DanglingEndpoint, DuplicateId, EmptyVertexSet}.
void validate_graph(const GraphSpec& spec, bool allow_empty = false);

/// A validated, immutable finite presentation of an arbitrary graph.
///
/// Vertices and edges are indexed in lexicographic order of their names, so
/// index order is the canonical tie-break order everywhere. Besides the
/// explicit edges, every infinite target (u, w) contributes two named
/// representatives `u~w#1`, `u~w#2` of the unnamed edges u -> w. These
/// "phantom" edges exist only so that algebra elements can talk about the
/// infinite fan; graph-level predicates consult `infinite_targets` instead.
class Graph {
 public:
  static constexpr int phantoms_per_target = 2;

  static Graph from_spec(const GraphSpec& spec, bool allow_empty = false);
  /// Canonical (sorted) spec of the explicit structure; phantoms omitted.
  GraphSpec to_spec() const;

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t explicit_edge_count() const { return explicit_edges_; }

  const std::string& vertex_name(VertexIndex v) const { return vertex_names_[v]; }
  const std::string& edge_name(EdgeIndex e) const { return edges_[e].name; }
  std::optional<VertexIndex> find_vertex(std::string_view name) const;
  std::optional<EdgeIndex> find_edge(std::string_view name) const;

  VertexIndex source(EdgeIndex e) const { return edges_[e].source; }
  VertexIndex range(EdgeIndex e) const { return edges_[e].range; }
  bool is_phantom(EdgeIndex e) const { return edges_[e].phantom; }

  /// Explicit out-edges, ascending.
  std::span<const EdgeIndex> out_edges(VertexIndex v) const { return out_[v]; }
  /// Explicit out-edges followed by phantom representatives, ascending.
  std::span<const EdgeIndex> algebra_out_edges(VertexIndex v) const { return algebra_out_[v]; }
  /// Explicit and phantom in-edges, ascending.
  std::span<const EdgeIndex> algebra_in_edges(VertexIndex v) const { return algebra_in_[v]; }
  std::span<const VertexIndex> infinite_targets(VertexIndex v) const { return infinite_[v]; }

  bool is_infinite_emitter(VertexIndex v) const { return !infinite_[v].empty(); }
  bool is_regular(VertexIndex v) const { return infinite_[v].empty() && !out_[v].empty(); }
  bool is_sink(VertexIndex v) const { return infinite_[v].empty() && out_[v].empty(); }
  /// Out-degree counting the infinite fan as unbounded.
  bool emits_exactly_one_edge(VertexIndex v) const { return infinite_[v].empty() && out_[v].size() == 1; }

  /// True when every vertex and edge name (phantoms included) is one character.
  bool single_character_names() const { return single_char_; }

  bool operator==(const Graph& o) const { return to_spec_equal(o); }

 private:
  struct EdgeRecord {
    std::string name;
    VertexIndex source;
    VertexIndex range;
    bool phantom;
  };

  bool to_spec_equal(const Graph& o) const;

  std::vector<std::string> vertex_names_;
  std::vector<EdgeRecord> edges_;
  std::size_t explicit_edges_ = 0;
  std::vector<std::vector<EdgeIndex>> out_;
  std::vector<std::vector<EdgeIndex>> algebra_out_;
  std::vector<std::vector<EdgeIndex>> algebra_in_;
  std::vector<std::vector<VertexIndex>> infinite_;
  bool single_char_ = true;
};

/// A path e_1...e_n, or the trivial path at `source` when `edges` is empty.
/// Ordered by edge sequence first, then by source vertex.
struct Path {
  VertexIndex source = 0;
  std::vector<EdgeIndex> edges;

  bool trivial() const { return edges.empty(); }
  std::size_t length() const { return edges.size(); }

  bool operator==(const Path&) const = default;
  std::strong_ordering operator<=>(const Path& o) const {
    if (auto c = edges <=> o.edges; c != 0) return c;
    return source <=> o.source;
  }
};

Path trivial_path(VertexIndex v);
/// Throws InvalidPath when consecutive edges do not compose.
Path make_path(const Graph& g, std::vector<EdgeIndex> edges);
VertexIndex path_range(const Graph& g, const Path& p);
/// Concatenation; requires range(a) == source(b).
Path concat(const Graph& g, const Path& a, const Path& b);
/// Whether `prefix` is an initial segment of `p` (sources must agree).
bool is_prefix(const Path& prefix, const Path& p);
std::vector<std::string> edge_names(const Graph& g, const Path& p);

/// A closed path with pairwise distinct source vertices.
struct Cycle {
  Path path;
  VertexIndex base() const { return path.source; }
  bool operator==(const Cycle&) const = default;
};

/// Regular vertices (finite nonempty explicit fan, no infinite targets), ascending.
std::vector<VertexIndex> regular_vertices(const Graph& g);

/// The exitless cycle through the least vertex lying on one, rotated to start
/// there; none if every cycle has an exit.
std::optional<Cycle> find_exitless_cycle(const Graph& g);

/// If v lies on an exitless cycle, that cycle rotated to start at v.
std::optional<Cycle> exitless_cycle_through(const Graph& g, VertexIndex v);

}  // namespace lpa

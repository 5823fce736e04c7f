#pragma once

#include <map>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/conditions.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/// Sorted, duplicate-free set of vertex indices.
using VertexSet = std::vector<VertexIndex>;

inline constexpr std::size_t default_enumeration_cap = 15;

/// Canonical order on vertex sets: by size, then lexicographically.
bool canonical_less(const VertexSet& a, const VertexSet& b);

struct AdmissiblePair {
  VertexSet hereditary;
  VertexSet breaking;
  bool operator==(const AdmissiblePair&) const = default;
};

/// The graph E\(H,S) together with where each primed item came from.
struct QuotientGraph {
  Graph graph;
  std::map<std::string, std::string> primed_vertices;
  std::map<std::string, std::string> primed_edges;
};

struct SurveyEntry {
  AdmissiblePair pair;
  ConditionReport report;
};

bool is_hereditary(const Graph& g, const VertexSet& h);
bool is_saturated(const Graph& g, const VertexSet& h);

/// Least hereditary saturated set containing `seed`. Throws UnknownVertex.
VertexSet hereditary_saturated_closure(const Graph& g, const VertexSet& seed);

/// All hereditary saturated sets in canonical order. Throws GraphTooLarge.
std::vector<VertexSet> enumerate_hereditary_saturated(const Graph& g, std::size_t cap = default_enumeration_cap);

/// B_H: infinite emitters outside H whose infinite fan lands in H and whose
/// explicit fan leaving H is nonempty. Throws InvalidSubset.
VertexSet breaking_vertices(const Graph& g, const VertexSet& h);

/// v^H = v - sum_{s(e)=v, r(e) not in H} e e^*. Throws NotABreakingVertex.
Element breaking_vertex_element(const Algebra& alg, const VertexSet& h, VertexIndex v);

/// Builds E\(H,S). Primed names append apostrophes until fresh. Infinite
/// targets inside H are dropped, so a vertex of S keeps only its finite fan.
/// Throws InvalidAdmissiblePair.
QuotientGraph quotient_graph(const Graph& g, const VertexSet& h, const VertexSet& s);

/// Every admissible pair (H, S) in canonical order.
std::vector<AdmissiblePair> admissible_pairs(const Graph& g, std::size_t cap = default_enumeration_cap);

/// Condition (L) report for the quotient by every admissible pair. Pairs are
/// evaluated in parallel; output order is canonical.
std::vector<SurveyEntry> quotient_survey(const Graph& g, std::size_t cap = default_enumeration_cap);

}  // namespace lpa

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lpa/algebra.hpp"
#include "lpa/conditions.hpp"
#include "lpa/error.hpp"
#include "lpa/graph.hpp"
#include "lpa/ideal_lattice.hpp"
#include "lpa/reduction.hpp"

namespace lpa {

using json = nlohmann::json;

/// Graph JSON:
///   {"vertices": [...], "edges": [{"name","source","range"}...],
///    "infinite": [{"vertex","targets":[...]}...]}   ("infinite" optional)
/// Throws SyntaxError (with line/column for malformed JSON) or the
/// validation errors of `validate_graph`.
Graph parse_graph(std::string_view text);
GraphSpec graph_spec_from_json(const json& j);
/// Canonical form: sorted names; "infinite" omitted when empty.
json graph_to_json(const Graph& g);
/// Graph JSON plus {"provenance": {"vertices": {...}, "edges": {...}}}.
json quotient_to_json(const QuotientGraph& q);

/// Element expressions:
///   expr  := ['+'|'-'] term (('+'|'-') term)*
///   term  := coef | coef atoms | atoms
///   coef  := INT | INT '/' INT
///   atoms := atom+                   juxtaposition is multiplication
///   atom  := IDENT ['*'] | '(' expr ')'
/// A run of identifier characters is split into known vertex/edge names; a
/// run that is itself a name is taken whole. '*' applies to the last name of
/// the run only. The result is in normal form.
Element parse_element(const Algebra& alg, std::string_view text);

/// Canonical rendering, e.g. "-ce + 2/3 e". Names are juxtaposed when every
/// identifier of the graph is one character, space-separated otherwise.
std::string render_element(const Algebra& alg, const Element& a);
std::string render_monomial(const Graph& g, const Monomial& m);
/// Edge names joined like monomials; a trivial path renders as its vertex.
std::string render_path(const Graph& g, const Path& p);

/// Comma-separated vertex names to a sorted index set; throws UnknownVertex.
VertexSet parse_vertex_list(const Graph& g, std::string_view csv);
std::vector<std::string> vertex_names(const Graph& g, const VertexSet& s);

json to_json(const ConditionReport& report);
json to_json(const Algebra& alg, const ReductionCertificate& cert);
json to_json(const Algebra& alg, const ZornWitness& w);
json to_json(const LaurentPoly& p);
json to_json(const Theorem1Report& report);
json to_json(const Error& e);

}  // namespace lpa

#include "lpa/io.hpp"

#include <algorithm>
#include <cctype>

namespace lpa {

// ---------------------------------------------------------------------------
// Graph JSON

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(offset, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "graph JSON: " + what);
}

const json& require(const json& j, const char* key, json::value_t type) {
  auto it = j.find(key);
  if (it == j.end()) schema_error(std::string("missing key '") + key + "'");
  if (it->type() != type) schema_error(std::string("key '") + key + "' has the wrong type");
  return *it;
}

std::string require_string(const json& j, const char* key) {
  return require(j, key, json::value_t::string).get<std::string>();
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) schema_error(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) schema_error(std::string(what) + " must contain strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

}  // namespace

GraphSpec graph_spec_from_json(const json& j) {
  if (!j.is_object()) schema_error("top level must be an object");
  GraphSpec spec;
  spec.vertices = string_list(require(j, "vertices", json::value_t::array), "vertices");
  for (const auto& e : require(j, "edges", json::value_t::array)) {
    if (!e.is_object()) schema_error("edges must contain objects");
    spec.edges.push_back({require_string(e, "name"), require_string(e, "source"), require_string(e, "range")});
  }
  if (auto it = j.find("infinite"); it != j.end()) {
    if (!it->is_array()) schema_error("infinite must be an array");
    for (const auto& inf : *it) {
      if (!inf.is_object()) schema_error("infinite must contain objects");
      spec.infinite.push_back(
          {require_string(inf, "vertex"), string_list(require(inf, "targets", json::value_t::array), "targets")});
    }
  }
  return spec;
}

Graph parse_graph(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorCode::SyntaxError, "malformed graph JSON at line " + std::to_string(line) + ", column " +
                                            std::to_string(column),
                {{"line", line}, {"column", column}});
  }
  return Graph::from_spec(graph_spec_from_json(j));
}

json graph_to_json(const Graph& g) {
  auto spec = g.to_spec();
  json out;
  out["vertices"] = spec.vertices;
  out["edges"] = json::array();
  for (const auto& e : spec.edges) out["edges"].push_back({{"name", e.name}, {"source", e.source}, {"range", e.range}});
  if (!spec.infinite.empty()) {
    out["infinite"] = json::array();
    for (const auto& inf : spec.infinite) out["infinite"].push_back({{"vertex", inf.vertex}, {"targets", inf.targets}});
  }
  return out;
}

json quotient_to_json(const QuotientGraph& q) {
  auto out = graph_to_json(q.graph);
  out["provenance"] = {{"vertices", q.primed_vertices}, {"edges", q.primed_edges}};
  return out;
}

// ---------------------------------------------------------------------------
// Element expressions

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '~' || c == '#';
}

class ExpressionParser {
 public:
  ExpressionParser(const Algebra& alg, std::string_view text) : alg_(alg), g_(alg.graph()), text_(text) {}

  Element parse() {
    auto e = expr();
    skip_space();
    if (pos_ != text_.size()) fail(ErrorCode::SyntaxError, "unexpected character '" + std::string(1, peek()) + "'");
    return alg_.normal_form(e);
  }

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& what, std::size_t at) const {
    throw Error(code, what + " at column " + std::to_string(at + 1), {{"line", 1}, {"column", at + 1}});
  }
  [[noreturn]] void fail(ErrorCode code, const std::string& what) const { fail(code, what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Element expr() {
    bool negative = false;
    if (char c = peek(); c == '-' || c == '+') {
      negative = c == '-';
      ++pos_;
    }
    Element acc = term();
    if (negative) acc = alg_.negate(acc);
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      auto t = term();
      acc = c == '+' ? alg_.add(acc, t) : alg_.subtract(acc, t);
    }
    return acc;
  }

  bool at_atom() {
    char c = peek();
    return c == '(' || ident_start(c);
  }

  Element term() {
    std::optional<Scalar> coef;
    if (std::isdigit(static_cast<unsigned char>(peek()))) coef = coefficient();
    if (!at_atom()) {
      if (!coef) fail(ErrorCode::SyntaxError, "expected a term");
      return alg_.scalar(*coef);
    }
    Element product = atom();
    while (at_atom()) product = alg_.multiply(product, atom());
    return coef ? alg_.scale(*coef, product) : product;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(ErrorCode::SyntaxError, "expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  Scalar coefficient() {
    skip_space();
    const auto start = pos_;
    mpz_class num(digits(), 10);
    if (peek() != '/') return alg_.field().from_integer(num);
    ++pos_;
    skip_space();
    mpz_class den(digits(), 10);
    if (den == 0) fail(ErrorCode::ZeroDenominator, "zero denominator", start);
    try {
      return alg_.field().from_fraction(num, den);
    } catch (const Error& e) {
      fail(e.code(), e.what(), start);
    }
  }

  Element atom() {
    skip_space();
    if (text_[pos_] == '(') {
      ++pos_;
      auto inner = expr();
      if (peek() != ')') fail(ErrorCode::SyntaxError, "expected ')'");
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '*') fail(ErrorCode::GhostOnGroup, "'*' cannot follow a group");
      return inner;
    }
    const auto start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    auto names = segment(text_.substr(start, pos_ - start), start);
    bool ghost = pos_ < text_.size() && text_[pos_] == '*';
    if (ghost) ++pos_;

    Element product;
    for (std::size_t i = 0; i < names.size(); ++i) {
      auto factor = resolve(names[i], ghost && i + 1 == names.size());
      product = i == 0 ? factor : alg_.multiply(product, factor);
    }
    return product;
  }

  bool known(std::string_view name) const { return g_.find_vertex(name) || g_.find_edge(name); }

  // Unique split of a run into known names; a run that is a name wins.
  std::vector<std::string> segment(std::string_view run, std::size_t start) const {
    if (known(run)) return {std::string(run)};
    const auto n = run.size();
    std::vector<int> ways(n + 1, 0);  // ways[i]: splits of run[i..], saturating at 2
    std::vector<std::size_t> next(n + 1, 0);
    ways[n] = 1;
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        if (ways[j] == 0 || !known(run.substr(i, j - i))) continue;
        if (ways[i] == 0) next[i] = j;
        ways[i] = std::min(2, ways[i] + ways[j]);
      }
    }
    if (ways[0] == 0) {
      throw Error(ErrorCode::UnknownIdentifier, "unknown identifier '" + std::string(run) + "' at column " +
                                                    std::to_string(start + 1),
                  {{"identifier", std::string(run)}, {"line", 1}, {"column", start + 1}});
    }
    if (ways[0] > 1) fail(ErrorCode::SyntaxError, "ambiguous identifier run '" + std::string(run) + "'", start);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; i = next[i]) out.emplace_back(run.substr(i, next[i] - i));
    return out;
  }

  Element resolve(const std::string& name, bool ghost) const {
    if (auto v = g_.find_vertex(name)) return alg_.vertex(*v);
    auto e = *g_.find_edge(name);
    return ghost ? alg_.ghost(e) : alg_.edge(e);
  }

  const Algebra& alg_;
  const Graph& g_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string separator(const Graph& g) { return g.single_character_names() ? "" : " "; }

}  // namespace

Element parse_element(const Algebra& alg, std::string_view text) { return ExpressionParser(alg, text).parse(); }

std::string render_path(const Graph& g, const Path& p) {
  if (p.trivial()) return g.vertex_name(p.source);
  std::string out;
  const auto sep = separator(g);
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += sep;
    out += g.edge_name(p.edges[i]);
  }
  return out;
}

std::string render_monomial(const Graph& g, const Monomial& m) {
  if (m.is_vertex()) return g.vertex_name(m.alpha.source);
  const auto sep = separator(g);
  std::string out;
  for (auto e : m.alpha.edges) {
    if (!out.empty()) out += sep;
    out += g.edge_name(e);
  }
  for (auto it = m.beta.edges.rbegin(); it != m.beta.edges.rend(); ++it) {
    if (!out.empty()) out += sep;
    out += g.edge_name(*it) + "*";
  }
  return out;
}

std::string render_element(const Algebra& alg, const Element& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, k] : a.terms()) {
    const bool negative = k.is_negative();
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    const auto magnitude = k.abs();
    if (!magnitude.is_one()) out += magnitude.to_string() + " ";
    out += render_monomial(alg.graph(), m);
  }
  return out;
}

VertexSet parse_vertex_list(const Graph& g, std::string_view csv) {
  VertexSet out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    auto name = csv.substr(start, end - start);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.remove_prefix(1);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.remove_suffix(1);
    if (!name.empty()) {
      auto v = g.find_vertex(name);
      if (!v) {
        throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(name) + "'",
                    {{"vertex", std::string(name)}});
      }
      out.push_back(*v);
    }
    start = end + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> vertex_names(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  for (auto v : s) out.push_back(g.vertex_name(v));
  return out;
}

// ---------------------------------------------------------------------------
// Reports

json to_json(const ConditionReport& report) {
  json out;
  out["condition"] = std::string(1, report.condition);
  out["holds"] = report.holds;
  out["method"] = report.method == ConditionMethod::Direct ? "direct" : "quotients";
  out["witness"] = nullptr;
  if (const auto* c = std::get_if<CycleWitness>(&report.witness)) {
    out["witness"] = {{"base", c->base}, {"cycle", c->edges}};
  } else if (const auto* p = std::get_if<SinglePathWitness>(&report.witness)) {
    out["witness"] = {{"vertex", p->vertex}, {"path", p->edges}};
  } else if (const auto* q = std::get_if<QuotientWitness>(&report.witness)) {
    out["witness"] = {{"H", q->hereditary}, {"S", q->breaking}, {"base", q->cycle.base}, {"cycle", q->cycle.edges}};
  }
  return out;
}

json to_json(const LaurentPoly& p) {
  json coeffs = json::object();
  for (const auto& [m, k] : p.coeffs()) coeffs[std::to_string(m)] = k.to_string();
  return {{"poly", p.to_string()}, {"coeffs", coeffs}};
}

json to_json(const Algebra& alg, const ReductionCertificate& cert) {
  const auto& g = alg.graph();
  json outcome;
  if (const auto* hit = std::get_if<VertexHit>(&cert.outcome)) {
    outcome = {{"kind", "vertex"}, {"vertex", g.vertex_name(hit->vertex)}, {"scalar", hit->scalar.to_string()}};
  } else {
    const auto& lo = std::get<LaurentObstruction>(cert.outcome);
    outcome = to_json(lo.poly);
    outcome["kind"] = "laurent";
    outcome["vertex"] = g.vertex_name(lo.vertex);
    outcome["cycle"] = edge_names(g, lo.cycle.path);
  }
  return {{"mu", render_path(g, cert.mu)},
          {"nu", render_path(g, cert.nu)},
          {"outcome", outcome},
          {"method", cert.method == ReductionMethod::Search ? "search" : "structured"}};
}

json to_json(const Algebra& alg, const ZornWitness& w) {
  return {{"b", render_element(alg, w.b)},
          {"ab", render_element(alg, w.idem)},
          {"checks",
           {{"idempotent", w.checks.idempotent},
            {"nonzero", w.checks.nonzero},
            {"bab", w.checks.bab},
            {"ba_idempotent", w.checks.ba_idempotent}}},
          {"certificate", to_json(alg, w.certificate)}};
}

json to_json(const Theorem1Report& r) {
  json out{{"condition_L", r.condition_L}, {"trials", r.trials}, {"passed", r.passed()}, {"failures", r.failures}};
  if (r.condition_L) {
    out["verified"] = r.verified;
    out["failed"] = r.failed;
  } else {
    out["obstruction_confirmed"] = r.obstruction_confirmed;
    out["multiplicative_checks"] = r.multiplicative_checks;
    out["multiplicative_failures"] = r.multiplicative_failures;
  }
  return out;
}

json to_json(const Error& e) {
  json err{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
  if (!e.detail().is_null()) err["detail"] = e.detail();
  return {{"error", err}};
}

}  // namespace lpa

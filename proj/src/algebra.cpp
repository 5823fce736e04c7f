#include "lpa/algebra.hpp"

#include "lpa/error.hpp"

namespace lpa {

void Element::add_term(const Monomial& m, const Scalar& k) {
  if (k.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, k);
  if (!inserted) {
    it->second += k;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::add_term(Monomial&& m, const Scalar& k) {
  if (k.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), k);
    return;
  }
  it->second += k;
  if (it->second.is_zero()) terms_.erase(it);
}

Algebra::Algebra(std::shared_ptr<const Graph> graph, Field field) : graph_(std::move(graph)), field_(field) {
  special_.resize(graph_->vertex_count());
  for (VertexIndex v = 0; v < graph_->vertex_count(); ++v) {
    if (graph_->is_regular(v)) special_[v] = graph_->out_edges(v).front();
  }
}

std::optional<EdgeIndex> Algebra::special_edge(VertexIndex v) const { return special_.at(v); }

Element Algebra::vertex(VertexIndex v) const {
  if (v >= graph_->vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  Element out;
  out.add_term(Monomial{trivial_path(v), trivial_path(v)}, field_.one());
  return out;
}

Element Algebra::edge(EdgeIndex e) const { return path(Path{graph_->source(e), {e}}); }

Element Algebra::ghost(EdgeIndex e) const { return ghost_path(Path{graph_->source(e), {e}}); }

Element Algebra::path(const Path& p) const {
  return monomial(p, trivial_path(path_range(*graph_, p)), field_.one());
}

Element Algebra::ghost_path(const Path& p) const {
  return monomial(trivial_path(path_range(*graph_, p)), p, field_.one());
}

Element Algebra::monomial(const Path& alpha, const Path& beta, const Scalar& k) const {
  Element raw;
  raw.add_term(Monomial{alpha, beta}, k);
  check_element(raw);
  return normal_form(raw);
}

Element Algebra::scalar(const Scalar& k) const {
  // k times the sum of all vertices: a local unit on every element.
  Element out;
  for (VertexIndex v = 0; v < graph_->vertex_count(); ++v) {
    out.add_term(Monomial{trivial_path(v), trivial_path(v)}, k);
  }
  return out;
}

Element Algebra::add(const Element& a, const Element& b) const {
  Element out = a;
  for (const auto& [m, k] : b.terms()) out.add_term(m, k);
  return out;
}

Element Algebra::subtract(const Element& a, const Element& b) const { return add(a, negate(b)); }

Element Algebra::negate(const Element& a) const { return scale(-field_.one(), a); }

Element Algebra::scale(const Scalar& k, const Element& a) const {
  Element out;
  for (const auto& [m, c] : a.terms()) out.add_term(m, k * c);
  return out;
}

std::optional<Monomial> Algebra::monomial_product(const Monomial& m1, const Monomial& m2) const {
  const Path& beta = m1.beta;
  const Path& gamma = m2.alpha;
  if (is_prefix(beta, gamma)) {
    // beta^* beta gamma' = gamma'
    Path rest{path_range(*graph_, beta), {gamma.edges.begin() + static_cast<std::ptrdiff_t>(beta.length()),
                                          gamma.edges.end()}};
    return Monomial{concat(*graph_, m1.alpha, rest), m2.beta};
  }
  if (is_prefix(gamma, beta)) {
    // (gamma beta')^* gamma = beta'^*
    Path rest{path_range(*graph_, gamma), {beta.edges.begin() + static_cast<std::ptrdiff_t>(gamma.length()),
                                           beta.edges.end()}};
    return Monomial{m1.alpha, concat(*graph_, m2.beta, rest)};
  }
  return std::nullopt;
}

void Algebra::accumulate_normal(Element& out, Monomial m, const Scalar& k) const {
  while (!m.alpha.trivial() && !m.beta.trivial() && m.alpha.edges.back() == m.beta.edges.back()) {
    const EdgeIndex d = m.alpha.edges.back();
    const VertexIndex u = graph_->source(d);
    if (special_[u] != d) break;
    m.alpha.edges.pop_back();
    m.beta.edges.pop_back();
    // alpha0 d d^* beta0^* = alpha0 beta0^* - sum_{e != d} alpha0 e e^* beta0^*
    const Scalar minus_k = -k;
    for (auto e : graph_->out_edges(u)) {
      if (e == d) continue;
      Monomial side = m;
      side.alpha.edges.push_back(e);
      side.beta.edges.push_back(e);
      out.add_term(std::move(side), minus_k);
    }
  }
  out.add_term(std::move(m), k);
}

Element Algebra::multiply(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [m1, k1] : a.terms()) {
    for (const auto& [m2, k2] : b.terms()) {
      if (auto m = monomial_product(m1, m2)) accumulate_normal(out, std::move(*m), k1 * k2);
    }
  }
  return out;
}

Element Algebra::multiply(std::initializer_list<const Element*> factors) const {
  auto it = factors.begin();
  Element out = **it;
  for (++it; it != factors.end(); ++it) out = multiply(out, **it);
  return out;
}

Element Algebra::involution(const Element& a) const {
  Element out;
  for (const auto& [m, k] : a.terms()) accumulate_normal(out, Monomial{m.beta, m.alpha}, k);
  return out;
}

Element Algebra::normal_form(const Element& a) const {
  Element out;
  for (const auto& [m, k] : a.terms()) accumulate_normal(out, m, k);
  return out;
}

bool Algebra::equal(const Element& a, const Element& b) const {
  return normal_form(subtract(a, b)).is_zero();
}

Element Algebra::corner_project(const Element& a, VertexIndex v) const {
  if (v >= graph_->vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  auto unit = vertex(v);
  return multiply(unit, multiply(a, unit));
}

bool Algebra::is_reducible(const Monomial& m) const {
  if (m.alpha.trivial() || m.beta.trivial()) return false;
  const EdgeIndex d = m.alpha.edges.back();
  return d == m.beta.edges.back() && special_[graph_->source(d)] == d;
}

Element Algebra::rewrite_step(const Element& a, const Monomial& which) const {
  auto it = a.terms().find(which);
  if (it == a.terms().end() || !is_reducible(which)) {
    throw Error(ErrorCode::InvalidElement, "rewrite_step target is not a reducible term");
  }
  Element out = a;
  const Scalar k = it->second;
  out.add_term(which, -k);
  Monomial m = which;
  const EdgeIndex d = m.alpha.edges.back();
  m.alpha.edges.pop_back();
  m.beta.edges.pop_back();
  for (auto e : graph_->out_edges(graph_->source(d))) {
    if (e == d) continue;
    Monomial side = m;
    side.alpha.edges.push_back(e);
    side.beta.edges.push_back(e);
    out.add_term(std::move(side), -k);
  }
  out.add_term(std::move(m), k);
  return out;
}

Element Algebra::normal_form_by_steps(const Element& a, std::mt19937_64& rng) const {
  Element cur = a;
  std::vector<const Monomial*> reducible;
  for (;;) {
    reducible.clear();
    for (const auto& [m, k] : cur.terms()) {
      if (is_reducible(m)) reducible.push_back(&m);
    }
    if (reducible.empty()) return cur;
    std::uniform_int_distribution<std::size_t> pick(0, reducible.size() - 1);
    Monomial chosen = *reducible[pick(rng)];
    cur = rewrite_step(cur, chosen);
  }
}

void Algebra::check_element(const Element& a) const {
  const auto& g = *graph_;
  auto check_path = [&](const Path& p) {
    if (p.source >= g.vertex_count()) throw Error(ErrorCode::InvalidElement, "path source out of range");
    VertexIndex at = p.source;
    for (auto e : p.edges) {
      if (e >= g.edge_count() || g.source(e) != at) {
        throw Error(ErrorCode::InvalidElement, "path edges do not compose");
      }
      at = g.range(e);
    }
    return at;
  };
  for (const auto& [m, k] : a.terms()) {
    if (k.modulus() != field_.characteristic()) {
      throw Error(ErrorCode::FieldMismatch, "coefficient from a different field");
    }
    if (check_path(m.alpha) != check_path(m.beta)) {
      throw Error(ErrorCode::InvalidElement, "monomial paths end at different vertices");
    }
  }
}

std::map<int, Element> degree_decomposition(const Element& a) {
  std::map<int, Element> parts;
  for (const auto& [m, k] : a.terms()) parts[m.degree()].add_term(m, k);
  return parts;
}

bool is_real(const Element& a) {
  for (const auto& [m, k] : a.terms()) {
    if (!m.beta.trivial()) return false;
  }
  return true;
}

}  // namespace lpa

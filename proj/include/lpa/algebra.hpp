#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/scalar.hpp"

namespace lpa {

/// The spanning element alpha * beta^*; range(alpha) == range(beta).
struct Monomial {
  Path alpha;
  Path beta;

  bool is_vertex() const { return alpha.trivial() && beta.trivial(); }
  int degree() const { return static_cast<int>(alpha.length()) - static_cast<int>(beta.length()); }

  bool operator==(const Monomial&) const = default;
  std::strong_ordering operator<=>(const Monomial& o) const {
    if (auto c = alpha.edges <=> o.alpha.edges; c != 0) return c;
    if (auto c = beta.edges <=> o.beta.edges; c != 0) return c;
    if (auto c = alpha.source <=> o.alpha.source; c != 0) return c;
    return beta.source <=> o.beta.source;
  }
};

/// Finite linear combination of monomials. Zero coefficients are never stored.
class Element {
 public:
  using Terms = std::map<Monomial, Scalar>;

  Element() = default;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Raw accumulation; does not normalize.
  void add_term(const Monomial& m, const Scalar& k);
  void add_term(Monomial&& m, const Scalar& k);

  /// Structural equality of stored terms (meaningful on normal forms).
  bool operator==(const Element&) const = default;

 private:
  Terms terms_;
};

/// Arithmetic in L_K(E) for a fixed graph and coefficient field.
///
/// Elements returned by public operations are in normal form with respect to
/// the basis { alpha beta^* : alpha, beta do not both end in the same special
/// edge }, where the special edge of a regular vertex is its least out-edge.
class Algebra {
 public:
  Algebra(std::shared_ptr<const Graph> graph, Field field);
  Algebra(Graph graph, Field field) : Algebra(std::make_shared<const Graph>(std::move(graph)), field) {}

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  const Field& field() const { return field_; }

  std::optional<EdgeIndex> special_edge(VertexIndex v) const;

  Element zero() const { return {}; }
  Element vertex(VertexIndex v) const;
  Element edge(EdgeIndex e) const;
  Element ghost(EdgeIndex e) const;
  Element path(const Path& p) const;
  Element ghost_path(const Path& p) const;
  /// k * alpha beta^*, normalized; throws InvalidElement if ranges differ.
  Element monomial(const Path& alpha, const Path& beta, const Scalar& k) const;
  Element scalar(const Scalar& k) const;

  Element add(const Element& a, const Element& b) const;
  Element subtract(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element scale(const Scalar& k, const Element& a) const;

  /// (alpha beta^*)(gamma delta^*) by path cancellation (e^* e = r(e),
  /// e^* f = 0); zero or a single monomial with coefficient one, not yet
  /// normalized.
  std::optional<Monomial> monomial_product(const Monomial& m1, const Monomial& m2) const;
  Element multiply(const Element& a, const Element& b) const;
  Element multiply(std::initializer_list<const Element*> factors) const;
  Element involution(const Element& a) const;
  Element normal_form(const Element& a) const;
  bool equal(const Element& a, const Element& b) const;
  /// v a v; throws UnknownVertex when v is out of range.
  Element corner_project(const Element& a, VertexIndex v) const;

  /// Whether the monomial has alpha = alpha0 d, beta = beta0 d with d special.
  bool is_reducible(const Monomial& m) const;
  /// One application of the rule v = sum e e^* to `which`, a term of `a`.
  Element rewrite_step(const Element& a, const Monomial& which) const;
  /// Normal form by repeated single steps on randomly chosen reducible terms.
  Element normal_form_by_steps(const Element& a, std::mt19937_64& rng) const;

  /// Throws InvalidElement unless every monomial is well formed over the graph.
  void check_element(const Element& a) const;

 private:
  void accumulate_normal(Element& out, Monomial m, const Scalar& k) const;

  std::shared_ptr<const Graph> graph_;
  Field field_;
  std::vector<std::optional<EdgeIndex>> special_;
};

/// Splits terms by degree |alpha| - |beta|; parts sum back to `a`.
std::map<int, Element> degree_decomposition(const Element& a);

/// True when no term carries a ghost part.
bool is_real(const Element& a);

}  // namespace lpa

#include <doctest.h>

#include <set>

#include "lpa/algebra.hpp"
#include "lpa/error.hpp"
#include "lpa/io.hpp"
#include "lpa/reduction.hpp"
#include "support/fixtures.hpp"
#include "support/random_graphs.hpp"

using namespace lpa;
using namespace lpa::testing;

namespace {

Monomial mono(const Graph& g, std::vector<EdgeIndex> alpha, std::vector<EdgeIndex> beta, VertexIndex at) {
  Path a = alpha.empty() ? trivial_path(at) : make_path(g, std::move(alpha));
  Path b = beta.empty() ? trivial_path(at) : make_path(g, std::move(beta));
  return {a, b};
}

// Every path of length <= max_len, by brute force over edge sequences.
std::vector<Path> all_paths(const Graph& g, std::size_t max_len) {
  std::vector<Path> out;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) out.push_back(trivial_path(v));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].length() == max_len) continue;
    for (auto e : g.algebra_out_edges(path_range(g, out[i]))) {
      Path p = out[i];
      p.edges.push_back(e);
      out.push_back(p);
    }
  }
  return out;
}

struct RandomAlgebra {
  Graph graph;
  Field field;
};

RandomAlgebra random_algebra(std::mt19937_64& rng, int i) {
  return {random_graph(rng, {.max_vertices = 4, .max_edges = 7, .infinite_rate = 0.15}),
          i % 2 ? Field::prime(5) : Field::rationals()};
}

const RandomElementShape ring_shape{.max_terms = 5, .max_path_length = 4, .coeff_range = 5, .use_phantoms = true};

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("monomial products") {
    auto g = toeplitz();
    Algebra alg(g, Field::rationals());
    auto c = eid(g, "c"), e = eid(g, "e");
    auto v = vid(g, "v"), w = vid(g, "w");
    // e^* e = w
    auto p = alg.monomial_product(mono(g, {}, {e}, w), mono(g, {e}, {}, w));
    REQUIRE(p);
    CHECK(p->is_vertex());
    CHECK(p->alpha.source == w);
    // e^* c = 0
    CHECK_FALSE(alg.monomial_product(mono(g, {}, {e}, w), mono(g, {c}, {}, v)));
    // v c = c
    auto vc = alg.monomial_product(mono(g, {}, {}, v), mono(g, {c}, {}, v));
    REQUIRE(vc);
    CHECK(*vc == mono(g, {c}, {}, v));
    // (c (cc)^*) c = c c^*, since beta = cc extends gamma = c
    auto longer = alg.monomial_product(mono(g, {c}, {c, c}, v), mono(g, {c}, {}, v));
    REQUIRE(longer);
    CHECK(*longer == mono(g, {c}, {c}, v));
  }

  TEST_CASE("multiplication examples") {
    auto g = toeplitz();
    Algebra alg(g, Field::rationals());
    auto x = parse_element(alg, "(v - c) e");
    CHECK(render_element(alg, x) == "-ce + e");
    CHECK(alg.equal(x, parse_element(alg, "e - ce")));
    CHECK(alg.multiply(x, alg.zero()).is_zero());
    CHECK(alg.multiply(alg.vertex(0), alg.vertex(1)).is_zero());
  }

  TEST_CASE("normal form examples") {
    auto l = line_graph(2);
    Algebra line(l, Field::rationals());
    CHECK(line.equal(parse_element(line, "e1 e1*"), parse_element(line, "v0")));

    Algebra fan_alg(fan(), Field::rationals());
    auto ee = parse_element(fan_alg, "ee*");
    CHECK(render_element(fan_alg, ee) == "v - ff*");
    CHECK(fan_alg.equal(parse_element(fan_alg, "ee* + ff*"), parse_element(fan_alg, "v")));
    CHECK_FALSE(fan_alg.equal(parse_element(fan_alg, "v"), parse_element(fan_alg, "w")));

    Algebra loop(single_loop(), Field::rationals());
    CHECK(render_element(loop, parse_element(loop, "cc*")) == "v");
    CHECK(render_element(loop, parse_element(loop, "c*c")) == "v");
    CHECK(render_element(loop, parse_element(loop, "ccc*")) == "c");
  }

  TEST_CASE("zero coefficients are pruned") {
    Algebra alg(toeplitz(), Field::rationals());
    auto a = parse_element(alg, "v - c");
    auto b = alg.add(a, alg.scale(alg.field().zero(), parse_element(alg, "e")));
    CHECK(alg.equal(a, b));
    CHECK(a == b);
    CHECK(parse_element(alg, "c - c").is_zero());
  }

  TEST_CASE("infinite emitters never rewrite") {
    Algebra alg(breaking_graph(), Field::rationals());
    auto dd = parse_element(alg, "d d*");
    CHECK(dd.size() == 1);
    CHECK_FALSE(alg.equal(dd, parse_element(alg, "u")));
    CHECK_FALSE(alg.special_edge(vid(alg.graph(), "u")));
  }

  TEST_CASE("involution") {
    Algebra alg(toeplitz(), Field::rationals());
    CHECK(alg.equal(alg.involution(parse_element(alg, "ce")), parse_element(alg, "e*c*")));
    CHECK(alg.equal(alg.involution(parse_element(alg, "v")), parse_element(alg, "v")));
    CHECK(alg.equal(alg.involution(parse_element(alg, "2 c + 1/2 ce*")), parse_element(alg, "2 c* + 1/2 ec*")));
  }

  TEST_CASE("degree decomposition") {
    Algebra alg(single_loop(), Field::rationals());
    auto parts = degree_decomposition(parse_element(alg, "v - c"));
    REQUIRE(parts.size() == 2);
    CHECK(alg.equal(parts.at(0), parse_element(alg, "v")));
    CHECK(alg.equal(parts.at(1), parse_element(alg, "-c")));
    CHECK(degree_decomposition(parse_element(alg, "v")).size() == 1);
    auto mixed = degree_decomposition(parse_element(alg, "c + c*"));
    CHECK(alg.equal(mixed.at(1), parse_element(alg, "c")));
    CHECK(alg.equal(mixed.at(-1), parse_element(alg, "c*")));
  }

  TEST_CASE("corner projection") {
    Algebra t(toeplitz(), Field::rationals());
    CHECK(t.corner_project(parse_element(t, "e"), 0).is_zero());
    CHECK(t.equal(t.corner_project(parse_element(t, "v + w"), 0), parse_element(t, "v")));
    CHECK_THROWS_AS(t.corner_project(parse_element(t, "v"), 5), Error);
    Algebra loop(single_loop(), Field::rationals());
    auto a = parse_element(loop, "v - c");
    CHECK(loop.equal(loop.corner_project(a, 0), a));
  }

  TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 150; ++i) {
      auto [g, field] = random_algebra(rng, i);
      Algebra alg(g, field);
      auto a = random_element(alg, rng, ring_shape);
      auto b = random_element(alg, rng, ring_shape);
      auto c = random_element(alg, rng, ring_shape);
      CHECK(alg.equal(alg.multiply(alg.multiply(a, b), c), alg.multiply(a, alg.multiply(b, c))));
      CHECK(alg.equal(alg.multiply(a, alg.add(b, c)), alg.add(alg.multiply(a, b), alg.multiply(a, c))));
      CHECK(alg.equal(alg.multiply(alg.add(a, b), c), alg.add(alg.multiply(a, c), alg.multiply(b, c))));
      CHECK(alg.equal(alg.involution(alg.multiply(a, b)), alg.multiply(alg.involution(b), alg.involution(a))));
      CHECK(alg.equal(alg.involution(alg.involution(a)), a));
      CHECK(alg.equal(alg.involution(alg.add(a, b)), alg.add(alg.involution(a), alg.involution(b))));
    }
  }

  TEST_CASE("vertex sums act as local units") {
    std::mt19937_64 rng(55);
    for (int i = 0; i < 100; ++i) {
      auto [g, field] = random_algebra(rng, i);
      Algebra alg(g, field);
      auto a = random_element(alg, rng, ring_shape);
      std::set<VertexIndex> support;
      for (const auto& [m, k] : a.terms()) {
        support.insert(m.alpha.source);
        support.insert(m.beta.source);
      }
      Element u;
      for (auto v : support) u = alg.add(u, alg.vertex(v));
      CHECK(alg.equal(alg.multiply(u, a), a));
      CHECK(alg.equal(alg.multiply(a, u), a));
    }
  }

  TEST_CASE("confluence under random rewrite orders") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 150; ++i) {
      auto [g, field] = random_algebra(rng, i);
      Algebra alg(g, field);
      // Raw, unnormalized combination of monomials.
      Element raw;
      for (int t = 0; t < 4; ++t) {
        auto m = random_element(alg, rng, ring_shape);
        for (const auto& [mono, k] : m.terms()) raw.add_term(mono, k);
        // Extend by a special edge on both sides to force rewriting.
        for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
          if (auto d = alg.special_edge(v)) {
            raw.add_term(Monomial{make_path(g, {*d}), make_path(g, {*d})}, alg.field().one());
            break;
          }
        }
      }
      std::mt19937_64 r1(rng()), r2(rng());
      auto n1 = alg.normal_form_by_steps(raw, r1);
      auto n2 = alg.normal_form_by_steps(raw, r2);
      CHECK(n1 == n2);
      CHECK(n1 == alg.normal_form(raw));
    }
  }

  TEST_CASE("grading is additive on homogeneous parts") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 150; ++i) {
      auto [g, field] = random_algebra(rng, i);
      Algebra alg(g, field);
      auto a = random_element(alg, rng, ring_shape);
      auto b = random_element(alg, rng, ring_shape);
      for (const auto& [m, pa] : degree_decomposition(a)) {
        for (const auto& [n, pb] : degree_decomposition(b)) {
          auto product = alg.multiply(pa, pb);
          for (const auto& [mono, k] : product.terms()) CHECK(mono.degree() == m + n);
        }
      }
    }
  }

  TEST_CASE("line graphs are matrix algebras") {
    for (int n : {2, 3, 4}) {
      auto g = line_graph(n);
      Algebra alg(g, Field::rationals());
      auto paths = all_paths(g, static_cast<std::size_t>(n - 1));
      std::set<Monomial> basis;
      for (const auto& a : paths) {
        for (const auto& b : paths) {
          if (path_range(g, a) != path_range(g, b)) continue;
          auto normal = alg.monomial(a, b, alg.field().one());
          for (const auto& [m, k] : normal.terms()) basis.insert(m);
        }
      }
      CHECK(basis.size() == static_cast<std::size_t>(n * n));
    }
  }

  TEST_CASE("monomial validation") {
    auto g = toeplitz();
    Algebra alg(g, Field::rationals());
    CHECK_THROWS_AS(alg.monomial(make_path(g, {eid(g, "e")}), trivial_path(vid(g, "v")), alg.field().one()), Error);
  }
}

#include <doctest.h>

#include "lpa/conditions.hpp"
#include "lpa/error.hpp"
#include "lpa/io.hpp"
#include "lpa/reduction.hpp"
#include "support/fixtures.hpp"
#include "support/random_graphs.hpp"

using namespace lpa;
using namespace lpa::testing;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::IoError;
}

Graph random_graph_with_L(std::mt19937_64& rng) {
  for (;;) {
    auto g = random_graph(rng, {.max_vertices = 6, .max_edges = 10});
    if (check_condition_L(g).holds) return g;
  }
}

}  // namespace

TEST_SUITE("reduction") {
  TEST_CASE("laurent polynomials") {
    auto f = Field::rationals();
    LaurentPoly p({{0, f.one()}, {1, -f.one()}});
    CHECK(p.to_string() == "1 - x");
    LaurentPoly q({{-2, f.one()}, {2, f.from_integer(3)}});
    CHECK(q.to_string() == "x^-2 + 3 x^2");
    LaurentPoly r({{-1, f.one()}});
    CHECK((p * r).to_string() == "x^-1 - 1");
    CHECK((p + p).to_string() == "2 - 2 x");
    CHECK(LaurentPoly().to_string() == "0");
  }

  TEST_CASE("toeplitz reduction") {
    auto g = toeplitz();
    Algebra alg(g, Field::rationals());
    auto a = parse_element(alg, "v - c");
    auto cert = reduce_to_vertex(alg, a);
    CHECK(render_path(g, cert.mu) == "e");
    CHECK(render_path(g, cert.nu) == "e");
    REQUIRE(cert.is_vertex_hit());
    auto hit = std::get<VertexHit>(cert.outcome);
    CHECK(g.vertex_name(hit.vertex) == "w");
    CHECK(hit.scalar.is_one());
    CHECK(certificate_holds(alg, a, cert));
  }

  TEST_CASE("exit redirection identities") {
    auto g = toeplitz();
    Algebra alg(g, Field::rationals());
    auto tau = parse_element(alg, "e");
    auto tau_star = parse_element(alg, "e*");
    auto c = parse_element(alg, "c");
    CHECK(alg.multiply({&tau_star, &c, &tau}).is_zero());
    CHECK(alg.equal(alg.multiply(tau_star, tau), parse_element(alg, "w")));
  }

  TEST_CASE("single loop obstruction") {
    auto g = single_loop();
    Algebra alg(g, Field::rationals());
    auto a = parse_element(alg, "v - c");
    auto cert = reduce_to_vertex(alg, a);
    REQUIRE_FALSE(cert.is_vertex_hit());
    auto lo = std::get<LaurentObstruction>(cert.outcome);
    CHECK(lo.poly.to_string() == "1 - x");
    CHECK(find_exitless_cycle(g)->base() == lo.vertex);
    CHECK(certificate_holds(alg, a, cert));
    CHECK(code_of([&] { zorn_witness(alg, a); }) == ErrorCode::ExitlessCycleObstruction);
    CHECK(code_of([&] { bab_witness(alg, a); }) == ErrorCode::ExitlessCycleObstruction);
  }

  TEST_CASE("units of the laurent corner reduce to vertices") {
    Algebra alg(single_loop(), Field::rationals());
    auto a = parse_element(alg, "3 c c");
    auto cert = reduce_to_vertex(alg, a);
    CHECK(cert.is_vertex_hit());
    CHECK(certificate_holds(alg, a, cert));
    CHECK(zorn_witness(alg, a).checks.all());
  }

  TEST_CASE("vertex reduction") {
    auto g = toeplitz();
    Algebra alg(g, Field::rationals());
    auto cert = reduce_to_vertex(alg, parse_element(alg, "w"));
    CHECK(cert.mu == trivial_path(vid(g, "w")));
    CHECK(cert.nu == trivial_path(vid(g, "w")));
    CHECK(std::get<VertexHit>(cert.outcome).vertex == vid(g, "w"));
    CHECK(code_of([&] { reduce_to_vertex(alg, alg.zero()); }) == ErrorCode::ZeroElement);
  }

  TEST_CASE("bound exceeded carries diagnostics") {
    Algebra alg(toeplitz(), Field::rationals());
    ReductionOptions opts;
    opts.max_len = 1;
    try {
      reduce_to_vertex(alg, parse_element(alg, "c - ccc"), opts);
      FAIL("expected BoundExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BoundExceeded);
      CHECK(e.detail().at("max_len") == 1);
      CHECK(e.detail().at("deepest_level") == 1);
      CHECK_FALSE(e.detail().at("deepest_products").empty());
    }
    opts.max_len = 2;
    auto cert = reduce_to_vertex(alg, parse_element(alg, "c - ccc"), opts);
    CHECK(render_path(alg.graph(), cert.mu) == "ce");
  }

  TEST_CASE("certificates respect the length bound") {
    std::mt19937_64 rng(808);
    for (int gi = 0; gi < 30; ++gi) {
      auto g = random_graph(rng, {.max_vertices = 5, .max_edges = 8});
      Algebra alg(g, Field::rationals());
      for (int i = 0; i < 10; ++i) {
        auto a = random_element(alg, rng);
        if (a.is_zero()) continue;
        ReductionOptions opts;
        opts.max_len = static_cast<int>(rng() % 3) + 1;
        try {
          auto cert = reduce_to_vertex(alg, a, opts);
          CHECK(static_cast<int>(cert.mu.length()) <= *opts.max_len);
          CHECK(static_cast<int>(cert.nu.length()) <= *opts.max_len);
          CHECK(certificate_holds(alg, a, cert));
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::BoundExceeded);
        }
      }
    }
  }

  TEST_CASE("zorn witnesses") {
    Algebra t(toeplitz(), Field::rationals());
    auto a = parse_element(t, "v - c");
    auto w = zorn_witness(t, a);
    CHECK(t.equal(w.b, parse_element(t, "ee*")));
    CHECK(t.equal(w.idem, parse_element(t, "(v - c) ee*")));
    CHECK(w.checks.all());
    CHECK(t.equal(bab_witness(t, a), parse_element(t, "ee*")));
    CHECK(t.equal(bab_witness(t, parse_element(t, "v")), parse_element(t, "v")));

    Algebra f(fan(), Field::rationals());
    auto nil = parse_element(f, "ef*");
    CHECK(f.multiply(nil, nil).is_zero());
    auto fw = zorn_witness(f, nil);
    CHECK(f.equal(fw.b, parse_element(f, "fe*")));
    CHECK(f.equal(fw.idem, parse_element(f, "ee*")));
    CHECK(render_element(f, fw.idem) == "v - ff*");
    CHECK(code_of([&] { zorn_witness(f, f.zero()); }) == ErrorCode::ZeroElement);
  }

  TEST_CASE("scalars are absorbed into the witness") {
    Algebra t(toeplitz(), Field::prime(5));
    auto a = parse_element(t, "3 v - 2 c");
    auto w = zorn_witness(t, a);
    CHECK(w.checks.all());
    CHECK(t.equal(t.multiply(w.idem, w.idem), w.idem));
  }

  TEST_CASE("idempotents in right ideals") {
    Algebra t(toeplitz(), Field::rationals());
    std::vector<Element> gens{parse_element(t, "v - c")};
    CHECK(t.equal(idempotent_in_right_ideal(t, gens), parse_element(t, "(v - c) ee*")));
    std::vector<Element> vertex{parse_element(t, "w")};
    CHECK(t.equal(idempotent_in_right_ideal(t, vertex), parse_element(t, "w")));
    std::vector<Element> zeros{t.zero()};
    CHECK(code_of([&] { idempotent_in_right_ideal(t, zeros); }) == ErrorCode::AllGeneratorsZero);
    std::vector<Element> skip{t.zero(), parse_element(t, "v - c")};
    CHECK(t.equal(idempotent_in_right_ideal(t, skip), parse_element(t, "(v - c) ee*")));
  }

  TEST_CASE("corner to laurent") {
    Algebra loop(single_loop(), Field::rationals());
    CHECK(corner_to_laurent(loop, 0, parse_element(loop, "v - c")).to_string() == "1 - x");
    CHECK(corner_to_laurent(loop, 0, parse_element(loop, "c c*")).to_string() == "1");
    CHECK(corner_to_laurent(loop, 0, parse_element(loop, "c* c* + 2 c")).to_string() == "x^-2 + 2 x");
    Algebra t(toeplitz(), Field::rationals());
    CHECK(code_of([&] { corner_to_laurent(t, 0, parse_element(t, "v")); }) == ErrorCode::NotExitlessCycleBase);
    auto g = Graph::from_spec({{"v", "w"}, {{"c", "v", "v"}, {"e", "w", "v"}}, {}});
    Algebra two(g, Field::rationals());
    CHECK(code_of([&] { corner_to_laurent(two, vid(g, "v"), parse_element(two, "e")); }) == ErrorCode::NotInCorner);
  }

  TEST_CASE("corner map is multiplicative and inverts laurent_to_corner") {
    auto g = Graph::from_spec({{"a", "b", "z"}, {{"x", "a", "b"}, {"y", "b", "a"}, {"t", "z", "a"}}, {}});
    Algebra alg(g, Field::rationals());
    auto cycle = *exitless_cycle_through(g, vid(g, "a"));
    std::mt19937_64 rng(4);
    for (int i = 0; i < 50; ++i) {
      LaurentPoly p, q;
      for (int k = 0; k < 3; ++k) {
        p.add_term(static_cast<int>(rng() % 7) - 3, alg.field().from_integer(static_cast<long>(rng() % 5) - 2));
        q.add_term(static_cast<int>(rng() % 7) - 3, alg.field().from_integer(static_cast<long>(rng() % 5) - 2));
      }
      auto cp = laurent_to_corner(alg, cycle, p);
      auto cq = laurent_to_corner(alg, cycle, q);
      CHECK(corner_to_laurent(alg, vid(g, "a"), cp) == p);
      CHECK(corner_to_laurent(alg, vid(g, "a"), alg.multiply(cp, cq)) == p * q);
    }
  }

  TEST_CASE("certificates and witnesses on random graphs satisfying L") {
    std::mt19937_64 rng(99);
    for (int gi = 0; gi < 12; ++gi) {
      auto g = random_graph_with_L(rng);
      for (auto field : {Field::rationals(), Field::prime(5)}) {
        Algebra alg(g, field);
        for (int i = 0; i < 25; ++i) {
          auto a = random_element(alg, rng);
          if (a.is_zero()) continue;
          auto cert = reduce_to_vertex(alg, a);
          CHECK(cert.is_vertex_hit());
          CHECK(certificate_holds(alg, a, cert));
          auto w = zorn_witness(alg, a);
          CHECK(w.checks.all());
          CHECK(check_witness(alg, a, w.b).all());
        }
      }
    }
  }

  TEST_CASE("structured and search routes agree on soundness") {
    std::mt19937_64 rng(12);
    for (int gi = 0; gi < 10; ++gi) {
      auto g = random_graph_with_L(rng);
      Algebra alg(g, Field::rationals());
      for (int i = 0; i < 10; ++i) {
        auto a = random_element(alg, rng);
        if (a.is_zero()) continue;
        auto max_len = default_max_len(alg, a);
        auto structured = structured_reduction(alg, a, max_len);
        REQUIRE(structured);
        CHECK(structured->is_vertex_hit());
        CHECK(certificate_holds(alg, a, *structured));
        auto search = canonical_search(alg, a, max_len, 1500);
        if (search.hit) CHECK(certificate_holds(alg, a, *search.hit));
      }
    }
  }

  TEST_CASE("laurent obstructions only at exitless cycles") {
    std::mt19937_64 rng(6);
    int obstructions = 0;
    for (int gi = 0; gi < 60; ++gi) {
      auto g = random_graph(rng, {.max_vertices = 4, .max_edges = 5});
      Algebra alg(g, Field::rationals());
      for (int i = 0; i < 10; ++i) {
        auto a = random_element(alg, rng);
        if (a.is_zero()) continue;
        try {
          auto cert = reduce_to_vertex(alg, a);
          CHECK(certificate_holds(alg, a, cert));
          if (const auto* lo = std::get_if<LaurentObstruction>(&cert.outcome)) {
            ++obstructions;
            CHECK(exitless_cycle_through(g, lo->vertex).has_value());
            CHECK_FALSE(check_condition_L(g).holds);
          }
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::BoundExceeded);
          CHECK_FALSE(check_condition_L(g).holds);
        }
      }
    }
    CHECK(obstructions > 0);
  }

  TEST_CASE("witness harness") {
    Algebra t(toeplitz(), Field::rationals());
    auto report = verify_theorem1(t, 100, 7);
    CHECK(report.condition_L);
    CHECK(report.verified == 100);
    CHECK(report.passed());

    Algebra loop(single_loop(), Field::rationals());
    auto obstruction = verify_theorem1(loop, 20, 1);
    CHECK_FALSE(obstruction.condition_L);
    CHECK(obstruction.obstruction_confirmed);
    CHECK(obstruction.passed());

    Algebra line(line_graph(4), Field::prime(5));
    auto acyclic = verify_theorem1(line, 50, 3);
    CHECK(acyclic.verified == 50);
  }

  TEST_CASE("witness harness is deterministic") {
    Algebra t(toeplitz(), Field::prime(5));
    auto a = verify_theorem1(t, 40, 123);
    auto b = verify_theorem1(t, 40, 123);
    CHECK(a.verified == b.verified);
    CHECK(a.failures == b.failures);
  }
}

#include "lpa/reduction.hpp"

#include <algorithm>
#include <climits>
#include <deque>

#include "lpa/error.hpp"
#include "lpa/io.hpp"
#include "lpa/serial_reference.hpp"
#include "kernel_support.hpp"

namespace lpa {

// ---------------------------------------------------------------------------
// Laurent polynomials

LaurentPoly::LaurentPoly(Coeffs coeffs) {
  for (auto& [m, k] : coeffs) add_term(m, k);
}

void LaurentPoly::add_term(int exponent, const Scalar& k) {
  if (k.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, k);
  if (!inserted) {
    it->second += k;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [m, k] : o.coeffs_) out.add_term(m, k);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [m1, k1] : coeffs_) {
    for (const auto& [m2, k2] : o.coeffs_) out.add_term(m1 + m2, k1 * k2);
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, k] : coeffs_) {
    const bool negative = k.is_negative();
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const auto magnitude = k.abs();
    if (m == 0) {
      out += magnitude.to_string();
      continue;
    }
    if (!magnitude.is_one()) out += magnitude.to_string() + " ";
    out += "x";
    if (m != 1) out += "^" + std::to_string(m);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shared helpers

namespace {

std::optional<VertexHit> as_vertex_hit(const Element& e) {
  if (e.size() != 1) return std::nullopt;
  const auto& [m, k] = *e.terms().begin();
  if (!m.is_vertex()) return std::nullopt;
  return VertexHit{m.alpha.source, k};
}

Element sandwich(const Algebra& alg, const Path& mu, const Element& a, const Path& nu) {
  return alg.multiply(alg.ghost_path(mu), alg.multiply(a, alg.path(nu)));
}

Path repeat_cycle(const Cycle& c, int times) {
  Path p{c.base(), {}};
  for (int i = 0; i < times; ++i) p.edges.insert(p.edges.end(), c.path.edges.begin(), c.path.edges.end());
  return p;
}

// Some edge sequence e with a nu e real and nonzero. Each extension strictly
// shortens the ghost part of every surviving term.
std::optional<Path> eliminate_ghosts(const Algebra& alg, const Element& cur, const Path& nu, int depth) {
  if (is_real(cur)) return nu;
  if (depth == 0) return std::nullopt;
  const auto& g = alg.graph();
  for (auto e : g.algebra_out_edges(path_range(g, nu))) {
    auto next = alg.multiply(cur, alg.edge(e));
    if (next.is_zero()) continue;
    Path extended = nu;
    extended.edges.push_back(e);
    if (auto found = eliminate_ghosts(alg, next, extended, depth - 1)) return found;
  }
  return std::nullopt;
}

// tau from x with tau^* closed tau = k r(tau): every closed-path term of
// `closed` (= k x + sum k_j delta_j) is killed and x survives.
std::optional<Path> find_redirection(const Algebra& alg, const Element& closed, VertexIndex x, const Scalar& k,
                                     int max_len) {
  const auto& g = alg.graph();
  constexpr std::size_t node_limit = 20000;
  std::size_t visited = 0;
  std::vector<Path> frontier{trivial_path(x)};
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (auto e : g.algebra_out_edges(path_range(g, p))) {
        Path tau = p;
        tau.edges.push_back(e);
        auto reduced = sandwich(alg, tau, closed, tau);
        if (auto hit = as_vertex_hit(reduced); hit && hit->scalar == k) return tau;
        if (++visited > node_limit) return std::nullopt;
        next.push_back(std::move(tau));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

// Corner element at the base of c as a Laurent polynomial; nullopt if some
// term is not a power of c or c^*.
std::optional<LaurentPoly> read_laurent(const Cycle& c, const Element& a) {
  const auto len = c.path.length();
  auto power = [&](const Path& p) -> std::optional<int> {
    if (p.source != c.base() || p.length() % len != 0) return std::nullopt;
    for (std::size_t i = 0; i < p.length(); ++i) {
      if (p.edges[i] != c.path.edges[i % len]) return std::nullopt;
    }
    return static_cast<int>(p.length() / len);
  };
  LaurentPoly out;
  for (const auto& [m, k] : a.terms()) {
    auto pa = power(m.alpha);
    auto pb = power(m.beta);
    if (!pa || !pb || (*pa != 0 && *pb != 0)) return std::nullopt;
    out.add_term(*pa - *pb, k);
  }
  return out;
}

// A monomial k x^m is a unit of the corner; absorb it into mu or nu.
ReductionCertificate absorb_unit(const Algebra& alg, ReductionCertificate cert) {
  const auto& lo = std::get<LaurentObstruction>(cert.outcome);
  const auto& [m, k] = *lo.poly.coeffs().begin();
  const auto& g = alg.graph();
  if (m >= 0) {
    cert.mu = concat(g, cert.mu, repeat_cycle(lo.cycle, m));
  } else {
    cert.nu = concat(g, cert.nu, repeat_cycle(lo.cycle, -m));
  }
  cert.outcome = VertexHit{lo.vertex, k};
  return cert;
}

int longest_path(const Element& a) {
  std::size_t longest = 0;
  for (const auto& [m, k] : a.terms()) longest = std::max({longest, m.alpha.length(), m.beta.length()});
  return static_cast<int>(longest);
}


}  // namespace

int default_max_len(const Algebra& alg, const Element& a) {
  return 2 * longest_path(a) + static_cast<int>(alg.graph().vertex_count());
}

// ---------------------------------------------------------------------------
// Structured route

std::optional<ReductionCertificate> structured_reduction(const Algebra& alg, const Element& a, int max_len) {
  const auto& g = alg.graph();
  std::optional<ReductionCertificate> obstruction;
  for (VertexIndex w = 0; w < g.vertex_count(); ++w) {
    auto aw = alg.multiply(a, alg.vertex(w));
    if (aw.is_zero()) continue;
    auto nu = eliminate_ghosts(alg, aw, trivial_path(w), longest_path(a) + 1);
    if (!nu) continue;
    auto real = alg.multiply(a, alg.path(*nu));
    // Shortest real term gamma: gamma^* real = k r(gamma) + closed paths.
    auto gamma_it = std::min_element(real.terms().begin(), real.terms().end(), [](const auto& l, const auto& r) {
      if (l.first.alpha.length() != r.first.alpha.length()) return l.first.alpha.length() < r.first.alpha.length();
      return l.first < r.first;
    });
    const Path gamma = gamma_it->first.alpha;
    const Scalar k = gamma_it->second;
    const VertexIndex x = path_range(g, gamma);
    auto closed = alg.multiply(alg.ghost_path(gamma), real);

    ReductionCertificate cert{gamma, *nu, VertexHit{x, k}, ReductionMethod::Structured};
    if (as_vertex_hit(closed)) {
      if (certificate_holds(alg, a, cert)) return cert;
      continue;
    }
    if (auto cycle = exitless_cycle_through(g, x)) {
      auto poly = read_laurent(*cycle, closed);
      if (!poly) continue;
      ReductionCertificate lc{gamma, *nu, LaurentObstruction{x, *cycle, *poly}, ReductionMethod::Structured};
      if (poly->is_monomial()) return absorb_unit(alg, lc);
      if (!obstruction) obstruction = std::move(lc);
      continue;
    }
    auto tau = find_redirection(alg, closed, x, k, max_len);
    if (!tau) continue;
    cert.mu = concat(g, gamma, *tau);
    cert.nu = concat(g, *nu, *tau);
    cert.outcome = VertexHit{path_range(g, *tau), k};
    if (certificate_holds(alg, a, cert)) return cert;
  }
  return obstruction;
}

// ---------------------------------------------------------------------------
// Canonical search (OpenMP kernel)

CanonicalSearchResult canonical_search(const Algebra& alg, const Element& a, int max_level, std::size_t budget) {
  CanonicalSearchResult result;
  detail::PathTable table(alg.graph(), max_level, detail::path_table_cap);
  for (int level = 0; level <= max_level; ++level) {
    if (level > table.max_len()) {
      result.exhausted_budget = true;
      break;
    }
    const auto remaining = budget - result.evaluated;
    auto candidates = detail::level_candidates(alg.graph(), table, level, remaining);
    result.evaluated += candidates.size();
    result.deepest_level = level;

    // Distinct mu in first-appearance order; left[i] = mu_i^* a.
    std::vector<const Path*> mus;
    std::vector<std::size_t> mu_of(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (mus.empty() || mus.back() != candidates[i].mu) mus.push_back(candidates[i].mu);
      mu_of[i] = mus.size() - 1;
    }
    std::vector<Element> left(mus.size());
    const auto mu_count = static_cast<std::int64_t>(mus.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < mu_count; ++i) {
      left[static_cast<std::size_t>(i)] = alg.multiply(alg.ghost_path(*mus[static_cast<std::size_t>(i)]), a);
    }

    std::int64_t best = INT64_MAX;
    const auto count = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 32) reduction(min : best)
    for (std::int64_t i = 0; i < count; ++i) {
      const auto& lhs = left[mu_of[static_cast<std::size_t>(i)]];
      if (lhs.is_zero() || i > best) continue;
      if (as_vertex_hit(alg.multiply(lhs, alg.path(*candidates[static_cast<std::size_t>(i)].nu)))) best = i;
    }
    if (best != INT64_MAX) {
      const auto& c = candidates[static_cast<std::size_t>(best)];
      auto hit = as_vertex_hit(alg.multiply(left[mu_of[static_cast<std::size_t>(best)]], alg.path(*c.nu)));
      result.hit = ReductionCertificate{*c.mu, *c.nu, *hit, ReductionMethod::Search};
      return result;
    }
    if (result.evaluated >= budget) {
      result.exhausted_budget = true;
      break;
    }
  }
  return result;
}

namespace {

// First few nonzero products mu^* a nu at `level`, for BoundExceeded reports.
json deepest_products(const Algebra& alg, const Element& a, int level) {
  constexpr std::size_t shown = 3;
  json out = json::array();
  if (level < 0) return out;
  const auto& g = alg.graph();
  detail::PathTable table(g, level, detail::path_table_cap);
  if (level > table.max_len()) return out;
  for (const auto& c : detail::level_candidates(g, table, level, 4096)) {
    auto product = alg.multiply(alg.multiply(alg.ghost_path(*c.mu), a), alg.path(*c.nu));
    if (product.is_zero()) continue;
    out.push_back(
        {{"mu", render_path(g, *c.mu)}, {"nu", render_path(g, *c.nu)}, {"product", render_element(alg, product)}});
    if (out.size() == shown) break;
  }
  return out;
}

}  // namespace

ReductionCertificate reduce_to_vertex(const Algebra& alg, const Element& a_in, const ReductionOptions& opts) {
  auto a = alg.normal_form(a_in);
  if (a.is_zero()) throw Error(ErrorCode::ZeroElement, "cannot reduce the zero element");
  const int max_len = opts.max_len.value_or(default_max_len(alg, a));
  if (max_len < 0) throw Error(ErrorCode::UsageError, "max-len must be nonnegative");

  auto structured = structured_reduction(alg, a, max_len);
  auto level_of = [](const ReductionCertificate& c) { return static_cast<int>(std::max(c.mu.length(), c.nu.length())); };
  if (structured && level_of(*structured) > max_len) structured.reset();
  const int level = structured && structured->is_vertex_hit() ? level_of(*structured) : max_len;
  auto search = opts.parallel ? canonical_search(alg, a, level, opts.search_budget)
                              : serial::canonical_search(alg, a, level, opts.search_budget);
  if (search.hit) return *search.hit;
  if (structured) return *structured;
  throw Error(ErrorCode::BoundExceeded,
              "no reduction to a vertex within length " + std::to_string(max_len),
              {{"max_len", max_len},
               {"evaluated", search.evaluated},
               {"budget_exhausted", search.exhausted_budget},
               {"element", render_element(alg, a)},
               {"deepest_level", search.deepest_level},
               {"deepest_products", deepest_products(alg, a, search.deepest_level)}});
}

bool certificate_holds(const Algebra& alg, const Element& a, const ReductionCertificate& cert) {
  const auto& g = alg.graph();
  if (path_range(g, cert.mu) != path_range(g, cert.nu)) return false;
  auto product = sandwich(alg, cert.mu, alg.normal_form(a), cert.nu);
  if (const auto* hit = std::get_if<VertexHit>(&cert.outcome)) {
    return !hit->scalar.is_zero() && alg.equal(product, alg.scale(hit->scalar, alg.vertex(hit->vertex)));
  }
  const auto& lo = std::get<LaurentObstruction>(cert.outcome);
  auto through = exitless_cycle_through(g, lo.vertex);
  if (!through || !(*through == lo.cycle)) return false;
  return alg.equal(product, laurent_to_corner(alg, lo.cycle, lo.poly));
}

Element laurent_to_corner(const Algebra& alg, const Cycle& c, const LaurentPoly& p) {
  Element out;
  for (const auto& [m, k] : p.coeffs()) {
    auto power = repeat_cycle(c, m >= 0 ? m : -m);
    out = alg.add(out, m >= 0 ? alg.monomial(power, trivial_path(c.base()), k)
                              : alg.monomial(trivial_path(c.base()), power, k));
  }
  return alg.normal_form(out);
}

// ---------------------------------------------------------------------------
// Witnesses

WitnessChecks check_witness(const Algebra& alg, const Element& a, const Element& b) {
  WitnessChecks checks;
  auto ab = alg.multiply(a, b);
  auto ba = alg.multiply(b, a);
  checks.nonzero = !ab.is_zero();
  checks.idempotent = alg.equal(alg.multiply(ab, ab), ab);
  checks.bab = alg.equal(alg.multiply(b, ab), b);
  checks.ba_idempotent = alg.equal(alg.multiply(ba, ba), ba);
  return checks;
}

ZornWitness zorn_witness(const Algebra& alg, const Element& a_in, const ReductionOptions& opts) {
  auto a = alg.normal_form(a_in);
  auto cert = reduce_to_vertex(alg, a, opts);
  if (const auto* lo = std::get_if<LaurentObstruction>(&cert.outcome)) {
    const auto& g = alg.graph();
    throw Error(ErrorCode::ExitlessCycleObstruction,
                "element reduces to a non-unit Laurent polynomial at an exitless cycle",
                {{"vertex", g.vertex_name(lo->vertex)},
                 {"cycle", edge_names(g, lo->cycle.path)},
                 {"poly", lo->poly.to_string()}});
  }
  const auto& hit = std::get<VertexHit>(cert.outcome);
  // x = k^{-1} mu^*, y = nu, b = y x.
  ZornWitness w;
  w.b = alg.monomial(cert.nu, cert.mu, hit.scalar.inverse());
  w.idem = alg.multiply(a, w.b);
  w.checks = check_witness(alg, a, w.b);
  w.certificate = std::move(cert);
  if (!w.checks.all()) {
    throw Error(ErrorCode::VerificationFailed, "constructed witness failed verification",
                {{"element", render_element(alg, a)}, {"b", render_element(alg, w.b)}});
  }
  return w;
}

Element bab_witness(const Algebra& alg, const Element& a, const ReductionOptions& opts) {
  return zorn_witness(alg, a, opts).b;
}

Element idempotent_in_right_ideal(const Algebra& alg, std::span<const Element> generators,
                                  const ReductionOptions& opts) {
  for (const auto& gen : generators) {
    auto a = alg.normal_form(gen);
    if (!a.is_zero()) return zorn_witness(alg, a, opts).idem;
  }
  throw Error(ErrorCode::AllGeneratorsZero, "every generator is zero");
}

LaurentPoly corner_to_laurent(const Algebra& alg, VertexIndex v, const Element& a_in) {
  const auto& g = alg.graph();
  if (v >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  auto cycle = exitless_cycle_through(g, v);
  if (!cycle) {
    throw Error(ErrorCode::NotExitlessCycleBase, "'" + g.vertex_name(v) + "' is not on an exitless cycle");
  }
  auto a = alg.normal_form(a_in);
  if (!(alg.corner_project(a, v) == a)) {
    throw Error(ErrorCode::NotInCorner, "element is not in the corner at '" + g.vertex_name(v) + "'");
  }
  auto poly = read_laurent(*cycle, a);
  if (!poly) throw Error(ErrorCode::NotInCorner, "corner element is not a combination of cycle powers");
  return *poly;
}

// ---------------------------------------------------------------------------
// Random elements and the verification harness

Element random_element(const Algebra& alg, std::mt19937_64& rng, const RandomElementShape& shape) {
  const auto& g = alg.graph();
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto usable = [&](EdgeIndex e) { return shape.use_phantoms || !g.is_phantom(e); };
  auto coefficient = [&]() {
    int num = 0;
    while (num == 0) num = uniform(-shape.coeff_range, shape.coeff_range);
    if (alg.field().is_rational()) return alg.field().from_fraction(num, uniform(1, shape.coeff_range));
    return alg.field().from_integer(num);
  };

  Element out;
  const int terms = uniform(1, shape.max_terms);
  for (int t = 0; t < terms; ++t) {
    const auto start = static_cast<VertexIndex>(uniform(0, static_cast<int>(g.vertex_count()) - 1));
    Path alpha = trivial_path(start);
    for (int len = uniform(0, shape.max_path_length); len > 0; --len) {
      std::vector<EdgeIndex> options;
      for (auto e : g.algebra_out_edges(path_range(g, alpha))) {
        if (usable(e)) options.push_back(e);
      }
      if (options.empty()) break;
      alpha.edges.push_back(options[static_cast<std::size_t>(uniform(0, static_cast<int>(options.size()) - 1))]);
    }
    // beta is grown backwards from range(alpha).
    const VertexIndex end = path_range(g, alpha);
    VertexIndex at = end;
    std::vector<EdgeIndex> reversed;
    for (int len = uniform(0, shape.max_path_length); len > 0; --len) {
      std::vector<EdgeIndex> options;
      for (auto e : g.algebra_in_edges(at)) {
        if (usable(e)) options.push_back(e);
      }
      if (options.empty()) break;
      auto e = options[static_cast<std::size_t>(uniform(0, static_cast<int>(options.size()) - 1))];
      reversed.push_back(e);
      at = g.source(e);
    }
    Path beta{at, {reversed.rbegin(), reversed.rend()}};
    out.add_term(Monomial{std::move(alpha), std::move(beta)}, coefficient());
  }
  return alg.normal_form(out);
}

namespace detail {

Theorem1Report verify_obstruction_branch(const Algebra& alg, std::size_t trials, std::uint64_t seed,
                                         const ReductionOptions& opts) {
  Theorem1Report report;
  report.condition_L = false;
  report.trials = trials;
  const auto& g = alg.graph();
  const auto cycle = *find_exitless_cycle(g);
  const auto v = cycle.base();

  LaurentPoly one_minus_x;
  one_minus_x.add_term(0, alg.field().one());
  one_minus_x.add_term(1, -alg.field().one());
  auto a = laurent_to_corner(alg, cycle, one_minus_x);
  try {
    auto cert = reduce_to_vertex(alg, a, opts);
    const auto* lo = std::get_if<LaurentObstruction>(&cert.outcome);
    report.obstruction_confirmed = lo != nullptr && lo->vertex == v && lo->poly == one_minus_x &&
                                   certificate_holds(alg, a, cert) && find_exitless_cycle(g).has_value();
  } catch (const Error& e) {
    report.failures.push_back(std::string("reduction of v - c raised ") + e.what());
  }
  try {
    zorn_witness(alg, a, opts);
    report.obstruction_confirmed = false;
    report.failures.push_back("zorn_witness succeeded on v - c");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ExitlessCycleObstruction) report.obstruction_confirmed = false;
  }

  std::mt19937_64 rng(seed);
  auto random_poly = [&]() {
    LaurentPoly p;
    const int terms = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < terms; ++i) {
      int exp = std::uniform_int_distribution<int>(-3, 3)(rng);
      int coef = std::uniform_int_distribution<int>(1, 6)(rng) * (rng() % 2 ? 1 : -1);
      p.add_term(exp, alg.field().from_integer(coef));
    }
    return p;
  };
  for (std::size_t i = 0; i < trials; ++i) {
    auto p = random_poly();
    auto q = random_poly();
    auto product = alg.multiply(laurent_to_corner(alg, cycle, p), laurent_to_corner(alg, cycle, q));
    ++report.multiplicative_checks;
    if (!(corner_to_laurent(alg, v, product) == p * q)) {
      ++report.multiplicative_failures;
      report.failures.push_back("phi(ab) != phi(a)phi(b) for " + p.to_string() + " and " + q.to_string());
    }
  }
  return report;
}


std::string theorem1_trial(const Algebra& alg, std::uint64_t seed, std::size_t index, const ReductionOptions& opts) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  Element a;
  while (a.is_zero()) a = random_element(alg, rng);
  try {
    auto w = zorn_witness(alg, a, opts);
    if (!w.checks.all()) return render_element(alg, a) + ": witness checks failed";
  } catch (const Error& e) {
    return render_element(alg, a) + ": " + std::string(error_code_name(e.code())) + " " + e.what();
  }
  return {};
}

Theorem1Report finish_trials(std::size_t trials, std::vector<std::string> failures) {
  Theorem1Report report;
  report.trials = trials;
  for (auto& f : failures) {
    if (!f.empty()) report.failures.push_back(std::move(f));
  }
  report.failed = report.failures.size();
  report.verified = trials - report.failed;
  return report;
}

}  // namespace detail

Theorem1Report verify_theorem1(const Algebra& alg, std::size_t trials, std::uint64_t seed,
                               const ReductionOptions& opts) {
  if (find_exitless_cycle(alg.graph()).has_value()) return detail::verify_obstruction_branch(alg, trials, seed, opts);
  ReductionOptions inner = opts;
  inner.parallel = false;
  std::vector<std::string> failures(trials);
  const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    failures[static_cast<std::size_t>(i)] = detail::theorem1_trial(alg, seed, static_cast<std::size_t>(i), inner);
  }
  return detail::finish_trials(trials, std::move(failures));
}

}  // namespace lpa

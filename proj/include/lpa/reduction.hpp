#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lpa/algebra.hpp"

namespace lpa {

/// Finitely supported sum of k_m x^m over Z; the image of a corner element
/// under v -> 1, c -> x, c^* -> x^{-1}.
class LaurentPoly {
 public:
  using Coeffs = std::map<int, Scalar>;

  LaurentPoly() = default;
  explicit LaurentPoly(Coeffs coeffs);

  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monomial() const { return coeffs_.size() == 1; }

  void add_term(int exponent, const Scalar& k);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly&) const = default;

  /// Ascending exponents, e.g. "1 - x", "x^-2 + 3 x^2".
  std::string to_string() const;

 private:
  Coeffs coeffs_;
};

struct VertexHit {
  VertexIndex vertex;
  Scalar scalar;
};

struct LaurentObstruction {
  VertexIndex vertex;
  Cycle cycle;
  LaurentPoly poly;
};

enum class ReductionMethod {
  /// Canonically least (mu, nu) found by the bounded exhaustive search.
  Search,
  /// Produced by the structured ghost-elimination / exit-redirection route.
  Structured,
};

/// mu^* a nu equals k v, or a Laurent polynomial in an exitless cycle at v.
struct ReductionCertificate {
  Path mu;
  Path nu;
  std::variant<VertexHit, LaurentObstruction> outcome;
  ReductionMethod method = ReductionMethod::Search;

  bool is_vertex_hit() const { return std::holds_alternative<VertexHit>(outcome); }
};

struct ReductionOptions {
  /// Deepest level |mu|, |nu| <= L searched; default 2 * (longest path in a) + |E^0|.
  std::optional<int> max_len;
  /// Candidate pairs the canonical search may evaluate before falling back to
  /// the structured certificate.
  std::size_t search_budget = 1500;
  bool parallel = true;
};

int default_max_len(const Algebra& alg, const Element& a);

/// Structured route only: ghost elimination on the right, minimal real prefix
/// on the left, then exit redirection. Certificates are verified.
std::optional<ReductionCertificate> structured_reduction(const Algebra& alg, const Element& a, int max_len);

struct CanonicalSearchResult {
  std::optional<ReductionCertificate> hit;
  std::size_t evaluated = 0;
  bool exhausted_budget = false;
  /// Last level whose candidates were evaluated; -1 if none.
  int deepest_level = -1;
};

/// Pairs (mu, nu) with max(|mu|, |nu|) = L for L = 0..max_level, ordered by
/// level, then |mu| + |nu|, then (mu, nu). Returns the first vertex hit among
/// the first `budget` candidates. Candidates are evaluated in parallel blocks;
/// the least hit wins regardless of completion order.
CanonicalSearchResult canonical_search(const Algebra& alg, const Element& a, int max_level, std::size_t budget);

/// Throws ZeroElement, BoundExceeded.
ReductionCertificate reduce_to_vertex(const Algebra& alg, const Element& a, const ReductionOptions& opts = {});

/// Recomputes mu^* a nu and compares with the claimed outcome.
bool certificate_holds(const Algebra& alg, const Element& a, const ReductionCertificate& cert);

/// Element of the cycle corner for a Laurent polynomial (x -> c, x^{-1} -> c^*).
Element laurent_to_corner(const Algebra& alg, const Cycle& c, const LaurentPoly& p);

struct WitnessChecks {
  bool idempotent = false;     // (ab)^2 = ab
  bool nonzero = false;        // ab != 0
  bool bab = false;            // b a b = b
  bool ba_idempotent = false;  // (ba)^2 = ba

  bool all() const { return idempotent && nonzero && bab && ba_idempotent; }
};

struct ZornWitness {
  Element b;
  Element idem;  // a b
  WitnessChecks checks;
  ReductionCertificate certificate;
};

WitnessChecks check_witness(const Algebra& alg, const Element& a, const Element& b);

/// b = k^{-1} nu mu^* from a vertex-hit certificate; every check is verified
/// before returning. Throws ZeroElement, ExitlessCycleObstruction, BoundExceeded.
ZornWitness zorn_witness(const Algebra& alg, const Element& a, const ReductionOptions& opts = {});

/// Nonzero b with b a b = b.
Element bab_witness(const Algebra& alg, const Element& a, const ReductionOptions& opts = {});

/// A nonzero idempotent a b in the right ideal generated by the first nonzero
/// generator. Throws AllGeneratorsZero.
Element idempotent_in_right_ideal(const Algebra& alg, std::span<const Element> generators,
                                  const ReductionOptions& opts = {});

/// Image of a in K[x, x^{-1}] for v the base of an exitless cycle.
/// Throws NotExitlessCycleBase, NotInCorner.
LaurentPoly corner_to_laurent(const Algebra& alg, VertexIndex v, const Element& a);

struct RandomElementShape {
  int max_terms = 4;
  int max_path_length = 3;
  /// Coefficients drawn from [-coeff_range, coeff_range] (numerators and denominators for Q).
  int coeff_range = 5;
  bool use_phantoms = false;
};

/// Pseudo-random element in normal form; may be zero.
Element random_element(const Algebra& alg, std::mt19937_64& rng, const RandomElementShape& shape = {});

struct Theorem1Report {
  bool condition_L = true;
  std::size_t trials = 0;
  std::size_t verified = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // rendered elements with the reason
  // Populated when condition (L) fails.
  bool obstruction_confirmed = false;
  std::size_t multiplicative_checks = 0;
  std::size_t multiplicative_failures = 0;

  bool passed() const {
    return condition_L ? failed == 0 : obstruction_confirmed && multiplicative_failures == 0;
  }
};

/// Trials are independent and evaluated in parallel; trial i draws from a
/// generator seeded with (seed, i), so results do not depend on scheduling.
Theorem1Report verify_theorem1(const Algebra& alg, std::size_t trials, std::uint64_t seed,
                               const ReductionOptions& opts = {});

}  // namespace lpa

#pragma once

// Pieces shared by the OpenMP kernels and their serial references, so both
// walk the same canonical orders.

#include <cstdint>
#include <string>
#include <vector>

#include "lpa/ideal_lattice.hpp"
#include "lpa/reduction.hpp"

namespace lpa::detail {

/// Path-table size beyond which the canonical search stops deepening.
inline constexpr std::size_t path_table_cap = 200000;

class PathTable {
 public:
  PathTable(const Graph& g, int max_len, std::size_t cap);

  /// Paths of exactly length l ending at v, in canonical order.
  const std::vector<Path>& ending_at(int l, VertexIndex v) const { return by_range_[l][v]; }
  /// Paths of exactly length l, in canonical order.
  const std::vector<Path>& of_length(int l) const { return by_length_[l]; }
  int max_len() const { return static_cast<int>(by_length_.size()) - 1; }
  bool truncated() const { return truncated_; }

 private:
  std::vector<std::vector<Path>> by_length_;
  std::vector<std::vector<std::vector<Path>>> by_range_;
  bool truncated_ = false;
};

struct Candidate {
  const Path* mu;
  const Path* nu;
};

/// Candidates with max(|mu|, |nu|) == level, ordered by |mu| + |nu|, then mu,
/// then nu; only pairs with range(mu) == range(nu) can produce a vertex.
/// At most `limit` candidates are produced.
std::vector<Candidate> level_candidates(const Graph& g, const PathTable& table, int level, std::size_t limit);

/// One harness trial: draws a nonzero element from a generator seeded with
/// (seed, index) and builds its witness. Empty on success, else the reason.
std::string theorem1_trial(const Algebra& alg, std::uint64_t seed, std::size_t index, const ReductionOptions& opts);

/// Witness harness on a graph with an exitless cycle.
Theorem1Report verify_obstruction_branch(const Algebra& alg, std::size_t trials, std::uint64_t seed,
                                         const ReductionOptions& opts);

Theorem1Report finish_trials(std::size_t trials, std::vector<std::string> failures);

/// The fixed-order list of admissible pairs and the per-pair survey step.
SurveyEntry survey_entry(const Graph& g, const AdmissiblePair& pair);

/// Throws GraphTooLarge.
void require_within_cap(const Graph& g, std::size_t cap);

VertexSet subset_from_mask(const VertexSet& universe, std::uint64_t mask);

}  // namespace lpa::detail

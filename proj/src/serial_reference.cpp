#include "lpa/serial_reference.hpp"

#include <algorithm>
#include <set>

#include "kernel_support.hpp"

namespace lpa::serial {

std::vector<VertexSet> enumerate_hereditary_saturated(const Graph& g, std::size_t cap) {
  detail::require_within_cap(g, cap);
  VertexSet all(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) all[v] = v;
  std::set<VertexSet> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    found.insert(hereditary_saturated_closure(g, detail::subset_from_mask(all, mask)));
  }
  std::vector<VertexSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<SurveyEntry> quotient_survey(const Graph& g, std::size_t cap) {
  std::vector<SurveyEntry> out;
  for (const auto& pair : admissible_pairs(g, cap)) out.push_back(detail::survey_entry(g, pair));
  return out;
}

CanonicalSearchResult canonical_search(const Algebra& alg, const Element& a, int max_level, std::size_t budget) {
  CanonicalSearchResult result;
  detail::PathTable table(alg.graph(), max_level, detail::path_table_cap);
  for (int level = 0; level <= max_level; ++level) {
    if (level > table.max_len()) {
      result.exhausted_budget = true;
      return result;
    }
    auto candidates = detail::level_candidates(alg.graph(), table, level, budget - result.evaluated);
    result.deepest_level = level;
    const Path* cached_mu = nullptr;
    Element left;
    for (const auto& c : candidates) {
      ++result.evaluated;
      if (c.mu != cached_mu) {
        cached_mu = c.mu;
        left = alg.multiply(alg.ghost_path(*c.mu), a);
      }
      if (left.is_zero()) continue;
      auto product = alg.multiply(left, alg.path(*c.nu));
      if (product.size() == 1 && product.terms().begin()->first.is_vertex()) {
        const auto& [m, k] = *product.terms().begin();
        result.hit = ReductionCertificate{*c.mu, *c.nu, VertexHit{m.alpha.source, k}, ReductionMethod::Search};
        return result;
      }
    }
    if (result.evaluated >= budget) {
      result.exhausted_budget = true;
      return result;
    }
  }
  return result;
}

Theorem1Report verify_theorem1(const Algebra& alg, std::size_t trials, std::uint64_t seed,
                               const ReductionOptions& opts) {
  if (find_exitless_cycle(alg.graph()).has_value()) return detail::verify_obstruction_branch(alg, trials, seed, opts);
  ReductionOptions inner = opts;
  inner.parallel = false;
  std::vector<std::string> failures;
  for (std::size_t i = 0; i < trials; ++i) failures.push_back(detail::theorem1_trial(alg, seed, i, inner));
  return detail::finish_trials(trials, std::move(failures));
}

}  // namespace lpa::serial

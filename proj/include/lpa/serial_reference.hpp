#pragma once

// Single-threaded reference versions of the OpenMP kernels. They walk the
// same canonical orders and must agree with the parallel versions exactly;
// the test suite and the benchmarks compare the two.

#include <cstdint>
#include <vector>

#include "lpa/ideal_lattice.hpp"
#include "lpa/reduction.hpp"

namespace lpa::serial {

std::vector<VertexSet> enumerate_hereditary_saturated(const Graph& g, std::size_t cap = default_enumeration_cap);

std::vector<SurveyEntry> quotient_survey(const Graph& g, std::size_t cap = default_enumeration_cap);

CanonicalSearchResult canonical_search(const Algebra& alg, const Element& a, int max_level, std::size_t budget);

Theorem1Report verify_theorem1(const Algebra& alg, std::size_t trials, std::uint64_t seed,
                               const ReductionOptions& opts = {});

}  // namespace lpa::serial

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

enum class ConditionMethod { Direct, Quotients };

/// Witness cycles and paths are stored by name: a quotient witness lives in a
/// different graph than the one the report is about.
struct CycleWitness {
  std::string base;
  std::vector<std::string> edges;
  bool operator==(const CycleWitness&) const = default;
};

/// A vertex that is the base of exactly one simple closed path.
struct SinglePathWitness {
  std::string vertex;
  std::vector<std::string> edges;
  bool operator==(const SinglePathWitness&) const = default;
};

/// An admissible pair whose quotient graph has an exitless cycle.
struct QuotientWitness {
  std::vector<std::string> hereditary;
  std::vector<std::string> breaking;
  CycleWitness cycle;
  bool operator==(const QuotientWitness&) const = default;
};

struct ConditionReport {
  char condition = 'L';
  ConditionMethod method = ConditionMethod::Direct;
  bool holds = true;
  std::variant<std::monostate, CycleWitness, SinglePathWitness, QuotientWitness> witness;
};

struct SimpleClosedPathCount {
  enum class Kind { Zero, One, TwoOrMore };
  Kind kind = Kind::Zero;
  /// Empty for Zero, the unique path for One, two distinct paths otherwise.
  /// Paths through the infinite fan use the phantom representatives.
  std::vector<Path> paths;
};

CycleWitness cycle_witness(const Graph& g, const Cycle& c);

ConditionReport check_condition_L(const Graph& g);

/// Throws UnknownVertex.
SimpleClosedPathCount count_simple_closed_paths(const Graph& g, VertexIndex v);

ConditionReport check_condition_K_direct(const Graph& g);

/// Throws GraphTooLarge when the vertex count exceeds `cap`.
ConditionReport check_condition_K_via_quotients(const Graph& g, std::size_t cap = 15);

}  // namespace lpa

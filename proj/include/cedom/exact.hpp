#pragma once

#include <cstdint>
#include <vector>

#include "cedom/graph.hpp"
#include "cedom/variants.hpp"

namespace cedom {

enum class ExactStatus { Optimal, Unknown };

struct ExactResult {
  ExactStatus status = ExactStatus::Unknown;
  /// The minimum cardinality when Optimal, otherwise the best upper bound.
  std::size_t optimum = 0;
  /// Every cardinality below this was ruled out.
  std::size_t lower_bound = 0;
  std::vector<Vertex> witness;
  std::uint64_t explored = 0;
};

inline constexpr std::uint64_t kDefaultExactBudget = 100'000'000;

/// Brute-force minimum by increasing cardinality, using naive_satisfied as
/// the decision procedure. Vertices every solution must contain are fixed
/// first: for 2-domination every vertex of degree < 2, for total
/// domination every neighbour of a degree-1 vertex. `budget` caps the number
/// of criterion evaluations; when it runs out the result is Unknown and
/// carries a minimal (not necessarily minimum) set as upper bound.
/// Throws InfeasibleInstance like the solver does.
ExactResult exact_min(const Graph& g, VariantKind kind, std::uint64_t budget = kDefaultExactBudget);

}  // namespace cedom

#pragma once

#include <span>
#include <vector>

#include "cedom/graph.hpp"
#include "cedom/rng.hpp"
#include "cedom/variants.hpp"

namespace cedom {

/// Per-vertex weights in [0, 1]. Draws normalise internally.
using ProbabilityVector = std::vector<double>;

/// A criterion-satisfying vertex set with score L(S) = |S|.
struct ScoredSet {
  std::vector<Vertex> members;  // sorted
  std::size_t score = 0;

  friend bool operator==(const ScoredSet&, const ScoredSet&) = default;
};

/// Returns index i with probability weights[i] / sum(weights). Throws
/// std::invalid_argument when no weight is positive.
std::size_t weighted_draw(std::span<const double> weights, Rng& rng);

/// Builds minimal criterion-satisfying sets from a probability vector.
///
/// Phase 1 grows S by weighted draws, zeroing each drawn vertex's weight,
/// until the criterion holds. If the remaining weight is exhausted first,
/// the rest of V is drawn uniformly. Phase 2 visits every member of S once,
/// in a random order drawn with weights 1 - P[v] (zero-weight members last,
/// uniformly), and drops the member whenever S minus it still satisfies the
/// criterion. All four criteria are closed under supersets, so one pass
/// yields a minimal set.
///
/// Reusing one Sampler across draws avoids reallocating the criterion state.
class Sampler {
 public:
  Sampler(const Graph& g, const NeighborhoodTables& tables, VariantKind kind);

  ScoredSet generate(std::span<const double> probabilities, Rng& rng);

 private:
  Vertex draw_outside_set(Rng& rng);

  CriterionState state_;
  std::vector<double> working_;
  std::vector<Vertex> candidates_;
  std::vector<double> candidate_weights_;
};

ScoredSet generate_minimal_set(const Graph& g, const NeighborhoodTables& tables, VariantKind kind,
                               std::span<const double> probabilities, Rng& rng);

}  // namespace cedom

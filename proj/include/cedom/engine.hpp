#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cedom/graph.hpp"
#include "cedom/sampler.hpp"
#include "cedom/variants.hpp"

namespace cedom {

struct CEParams {
  std::size_t samples = 100;     // N
  std::size_t elite = 10;        // M
  double rho = 0.01;             // weighting parameter
  double alpha = 0.2;            // smoothing
  std::size_t stagnation = 20;   // r
  std::size_t max_iterations = 10000;
  /// Starting value of every entry of P^0.
  double initial_probability = 0.5;

  /// Throws std::invalid_argument describing the first violated bound.
  void validate() const;
};

/// The M best samples of one iteration, ordered by score then generation index.
using EliteSet = std::vector<ScoredSet>;

struct IterationRecord {
  std::size_t iteration_best = 0;
  std::size_t global_best = 0;
};

struct RunResult {
  std::uint64_t seed = 0;
  std::vector<Vertex> best_set;
  std::size_t best_score = 0;
  std::size_t iterations = 0;
  std::vector<IterationRecord> trace;
  double seconds = 0.0;
};

/// Elite weights w(S) = exp(-L(S) / delta) with delta = L_min / ln(1/rho),
/// so the best elite member gets weight rho and a member k times as large
/// gets rho^k.
std::vector<double> elite_weights(const EliteSet& elite, double rho);

/// Weighted inclusion marginals: entry i is the weight of elite sets
/// containing i over the total weight.
ProbabilityVector weighted_marginals(const EliteSet& elite, std::span<const double> weights, Vertex n);

ProbabilityVector compute_pstar(const EliteSet& elite, double rho, Vertex n);

/// alpha * pstar + (1 - alpha) * current, elementwise.
ProbabilityVector blend(std::span<const double> pstar, std::span<const double> current, double alpha);

/// One cross-entropy run. Sample i of iteration t draws from its own stream
/// derive_seed(seed, t, i), so results depend only on the inputs.
RunResult ce_run(const Graph& g, const NeighborhoodTables& tables, VariantKind kind,
                 const CEParams& params, std::uint64_t seed);

struct MultiRunResult {
  std::vector<RunResult> runs;  // in seed order
  std::size_t best_index = 0;

  const RunResult& best() const { return runs.at(best_index); }
};

/// Independent runs, one per seed; the best is the lowest score, ties going
/// to the earlier seed. `threads` > 1 runs seeds concurrently.
MultiRunResult ce_multi(const Graph& g, const NeighborhoodTables& tables, VariantKind kind,
                        const CEParams& params, std::span<const std::uint64_t> seeds,
                        unsigned threads = 1);

}  // namespace cedom

#include "cedom/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace cedom {

void CEParams::validate() const {
  if (samples < 1) throw std::invalid_argument("N must be at least 1");
  if (elite < 1 || elite > samples) throw std::invalid_argument("M must satisfy 1 <= M <= N");
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("rho must lie in (0, 1)");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in (0, 1]");
  if (stagnation < 1) throw std::invalid_argument("r must be at least 1");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
  if (!(initial_probability > 0.0 && initial_probability <= 1.0)) {
    throw std::invalid_argument("initial probability must lie in (0, 1]");
  }
}

std::vector<double> elite_weights(const EliteSet& elite, double rho) {
  if (elite.empty()) throw std::invalid_argument("elite set is empty");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& s : elite) best = std::min(best, s.score);
  if (best == 0) throw std::invalid_argument("elite scores must be positive");

  const double delta = static_cast<double>(best) / std::log(1.0 / rho);
  std::vector<double> weights;
  weights.reserve(elite.size());
  for (const auto& s : elite) weights.push_back(std::exp(-static_cast<double>(s.score) / delta));
  return weights;
}

ProbabilityVector weighted_marginals(const EliteSet& elite, std::span<const double> weights, Vertex n) {
  if (weights.size() != elite.size()) throw std::invalid_argument("one weight per elite set required");
  ProbabilityVector out(static_cast<std::size_t>(n), 0.0);
  double total = 0.0;
  for (std::size_t k = 0; k < elite.size(); ++k) {
    total += weights[k];
    for (Vertex v : elite[k].members) out.at(v) += weights[k];
  }
  if (!(total > 0.0)) throw std::invalid_argument("elite weights sum to zero");
  for (double& p : out) p = std::clamp(p / total, 0.0, 1.0);
  return out;
}

ProbabilityVector compute_pstar(const EliteSet& elite, double rho, Vertex n) {
  return weighted_marginals(elite, elite_weights(elite, rho), n);
}

ProbabilityVector blend(std::span<const double> pstar, std::span<const double> current, double alpha) {
  if (pstar.size() != current.size()) throw std::invalid_argument("blend: length mismatch");
  ProbabilityVector out(pstar.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::clamp(alpha * pstar[i] + (1.0 - alpha) * current[i], 0.0, 1.0);
  }
  return out;
}

RunResult ce_run(const Graph& g, const NeighborhoodTables& tables, VariantKind kind,
                 const CEParams& params, std::uint64_t seed) {
  params.validate();
  const auto start = std::chrono::steady_clock::now();
  Sampler sampler(g, tables, kind);

  RunResult result;
  result.seed = seed;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  ProbabilityVector probabilities(static_cast<std::size_t>(g.n()), params.initial_probability);

  std::vector<ScoredSet> samples(params.samples);
  std::vector<std::size_t> order(params.samples);
  const std::size_t elite_size = std::min(params.elite, params.samples);
  EliteSet elite(elite_size);
  std::size_t stagnant = 0;

  for (std::size_t t = 0; t < params.max_iterations; ++t) {
    for (std::size_t i = 0; i < params.samples; ++i) {
      Rng rng(derive_seed(seed, t, i));
      samples[i] = sampler.generate(probabilities, rng);
    }
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return samples[a].score < samples[b].score; });
    for (std::size_t k = 0; k < elite_size; ++k) elite[k] = samples[order[k]];

    const std::size_t iteration_best = elite.front().score;
    if (iteration_best < best) {
      best = iteration_best;
      result.best_set = elite.front().members;
      stagnant = 0;
    } else {
      ++stagnant;
    }
    result.trace.push_back({iteration_best, best});
    result.iterations = t + 1;

    probabilities = blend(compute_pstar(elite, params.rho, g.n()), probabilities, params.alpha);
    if (stagnant >= params.stagnation) break;
  }

  result.best_score = best;
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

MultiRunResult ce_multi(const Graph& g, const NeighborhoodTables& tables, VariantKind kind,
                        const CEParams& params, std::span<const std::uint64_t> seeds, unsigned threads) {
  if (seeds.empty()) throw std::invalid_argument("ce_multi: seed list is empty");
  params.validate();
  require_feasible(g, kind);

  MultiRunResult out;
  out.runs.resize(seeds.size());
  const unsigned workers = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(seeds.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < seeds.size(); ++i) out.runs[i] = ce_run(g, tables, kind, params, seeds[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(seeds.size());
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i; (i = next.fetch_add(1)) < seeds.size();) {
            try {
              out.runs[i] = ce_run(g, tables, kind, params, seeds[i]);
            } catch (...) {
              errors[i] = std::current_exception();
            }
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  for (std::size_t i = 1; i < out.runs.size(); ++i) {
    if (out.runs[i].best_score < out.runs[out.best_index].best_score) out.best_index = i;
  }
  return out;
}

}  // namespace cedom

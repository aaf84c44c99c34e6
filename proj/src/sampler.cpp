#include "cedom/sampler.hpp"

#include <numeric>
#include <stdexcept>

namespace cedom {

namespace {

std::size_t draw_with_total(std::span<const double> weights, double total, Rng& rng) {
  const double target = rng.uniform() * total;
  double cumulative = 0.0;
  std::size_t last_positive = weights.size();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    cumulative += weights[i];
    last_positive = i;
    if (target < cumulative) return i;
  }
  // Rounding can leave target just above the accumulated sum.
  return last_positive;
}

}  // namespace

std::size_t weighted_draw(std::span<const double> weights, Rng& rng) {
  double total = 0.0;
  for (double w : weights) {
    if (w > 0.0) total += w;
  }
  if (!(total > 0.0)) throw std::invalid_argument("weighted_draw: no positive weight");
  return draw_with_total(weights, total, rng);
}

Sampler::Sampler(const Graph& g, const NeighborhoodTables& tables, VariantKind kind)
    : state_(g, tables, kind) {}

Vertex Sampler::draw_outside_set(Rng& rng) {
  const Vertex n = state_.graph().n();
  auto k = rng.below(static_cast<std::uint64_t>(n) - state_.set_size());
  for (Vertex v = 0; v < n; ++v) {
    if (state_.contains(v)) continue;
    if (k-- == 0) return v;
  }
  throw std::logic_error("draw_outside_set: every vertex is already in the set");
}

ScoredSet Sampler::generate(std::span<const double> probabilities, Rng& rng) {
  const Vertex n = state_.graph().n();
  if (probabilities.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("probability vector length does not match vertex count");
  }
  for (double p : probabilities) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability entries must lie in [0, 1]");
  }

  state_.clear();
  working_.assign(probabilities.begin(), probabilities.end());
  while (!state_.is_satisfied()) {
    const double total = std::accumulate(working_.begin(), working_.end(), 0.0);
    const Vertex v = total > 0.0 ? static_cast<Vertex>(draw_with_total(working_, total, rng))
                                 : draw_outside_set(rng);
    state_.add_vertex(v);
    working_[v] = 0.0;
  }

  candidates_ = state_.members();
  candidate_weights_.resize(candidates_.size());
  for (std::size_t i = 0; i < candidates_.size(); ++i) {
    candidate_weights_[i] = 1.0 - probabilities[candidates_[i]];
  }
  while (!candidates_.empty()) {
    const double total = std::accumulate(candidate_weights_.begin(), candidate_weights_.end(), 0.0);
    const std::size_t pick = total > 0.0 ? draw_with_total(candidate_weights_, total, rng)
                                         : static_cast<std::size_t>(rng.below(candidates_.size()));
    const Vertex v = candidates_[pick];
    candidates_[pick] = candidates_.back();
    candidates_.pop_back();
    candidate_weights_[pick] = candidate_weights_.back();
    candidate_weights_.pop_back();

    state_.remove_vertex(v);
    if (!state_.is_satisfied()) state_.add_vertex(v);
  }

  ScoredSet result;
  result.members = state_.members();
  result.score = result.members.size();
  return result;
}

ScoredSet generate_minimal_set(const Graph& g, const NeighborhoodTables& tables, VariantKind kind,
                               std::span<const double> probabilities, Rng& rng) {
  Sampler sampler(g, tables, kind);
  return sampler.generate(probabilities, rng);
}

}  // namespace cedom

#include "cedom/exact.hpp"

namespace cedom {

namespace {

std::vector<std::uint8_t> forced_vertices(const Graph& g, VariantKind kind) {
  std::vector<std::uint8_t> forced(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (kind == VariantKind::TwoDomination && g.degree(v) < 2) forced[v] = 1;
    if (kind == VariantKind::TotalDomination && g.degree(v) == 1) forced[g.neighbors(v)[0]] = 1;
  }
  return forced;
}

std::vector<Vertex> to_set(const std::vector<std::uint8_t>& mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(mask.size()); ++v) {
    if (mask[v]) out.push_back(v);
  }
  return out;
}

// Drops vertices of V in id order while the criterion still holds.
std::vector<Vertex> greedy_minimal(const Graph& g, VariantKind kind) {
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(g.n()), 1);
  for (Vertex v = 0; v < g.n(); ++v) {
    mask[v] = 0;
    if (!naive_satisfied_mask(g, kind, mask)) mask[v] = 1;
  }
  return to_set(mask);
}

}  // namespace

ExactResult exact_min(const Graph& g, VariantKind kind, std::uint64_t budget) {
  require_feasible(g, kind);

  std::vector<std::uint8_t> mask = forced_vertices(g, kind);
  std::vector<Vertex> free;
  std::size_t forced_count = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (mask[v]) {
      ++forced_count;
    } else {
      free.push_back(v);
    }
  }

  ExactResult result;
  const std::size_t f = free.size();
  std::vector<std::size_t> pick;
  for (std::size_t k = 0; k <= f; ++k) {
    result.lower_bound = forced_count + k;
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      if (result.explored >= budget) {
        result.status = ExactStatus::Unknown;
        result.witness = greedy_minimal(g, kind);
        result.optimum = result.witness.size();
        return result;
      }
      for (std::size_t i : pick) mask[free[i]] = 1;
      ++result.explored;
      const bool ok = naive_satisfied_mask(g, kind, mask);
      if (ok) {
        result.status = ExactStatus::Optimal;
        result.witness = to_set(mask);
        result.optimum = result.witness.size();
        return result;
      }
      for (std::size_t i : pick) mask[free[i]] = 0;

      // Next k-combination of 0..f-1 in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == f - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  // Unreachable for feasible instances: V itself satisfies every criterion.
  throw InfeasibleInstance("no satisfying set exists");
}

}  // namespace cedom

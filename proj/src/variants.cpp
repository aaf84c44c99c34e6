#include "cedom/variants.hpp"

#include <string>

namespace cedom {

std::string_view variant_name(VariantKind kind) {
  switch (kind) {
    case VariantKind::Domination: return "dom";
    case VariantKind::TotalDomination: return "total";
    case VariantKind::TwoDomination: return "2dom";
    case VariantKind::SecureDomination: return "secure";
  }
  return "?";
}

std::optional<VariantKind> parse_variant(std::string_view name) {
  for (VariantKind kind : kAllVariants) {
    if (variant_name(kind) == name) return kind;
  }
  return std::nullopt;
}

bool is_feasible(const Graph& g, VariantKind kind) {
  return kind != VariantKind::TotalDomination || !has_isolated_vertex(g);
}

void require_feasible(const Graph& g, VariantKind kind) {
  if (!is_feasible(g, kind)) {
    throw InfeasibleInstance("graph has an isolated vertex and never contains a total dominating set");
  }
}

CriterionState::CriterionState(const Graph& g, const NeighborhoodTables& tables, VariantKind kind)
    : graph_(&g), tables_(&tables), kind_(kind) {
  require_feasible(g, kind);
  clear();
}

void CriterionState::clear() {
  const auto n = static_cast<std::size_t>(graph_->n());
  in_set_.assign(n, 0);
  domcount_.assign(n, 0);
  defenders_.assign(n, 0);
  size_ = 0;
  deficiency_ = n;
}

std::int32_t CriterionState::closed_count(Vertex v) const {
  return kind_ == VariantKind::TotalDomination ? domcount_[v] + in_set_[v] : domcount_[v];
}

bool CriterionState::violated(Vertex v) const {
  switch (kind_) {
    case VariantKind::Domination:
    case VariantKind::TotalDomination: return domcount_[v] == 0;
    case VariantKind::TwoDomination: return !in_set_[v] && domcount_[v] <= 1;
    case VariantKind::SecureDomination: return !in_set_[v] && defenders_[v] == 0;
  }
  return true;
}

// A neighbour y of w that is dominated by w alone must be covered by v after
// the swap. w itself is adjacent to v, so it stays dominated.
bool CriterionState::defends(Vertex w, Vertex v) const {
  for (Vertex y : graph_->neighbors(w)) {
    if (y != v && closed_count(y) == 1 && !graph_->adjacent(y, v)) return false;
  }
  return true;
}

std::int32_t CriterionState::count_defenders(Vertex v) const {
  std::int32_t count = 0;
  for (Vertex w : graph_->neighbors(v)) {
    if (in_set_[w] && defends(w, v)) ++count;
  }
  return count;
}

bool CriterionState::capable_of_defending(Vertex w, Vertex v) const {
  if (w < 0 || v < 0 || w >= graph_->n() || v >= graph_->n()) return false;
  if (!in_set_[w] || in_set_[v] || !graph_->adjacent(w, v)) return false;
  return defends(w, v);
}

void CriterionState::update(Vertex v, bool adding) {
  const bool secure = kind_ == VariantKind::SecureDomination;
  const auto affected = secure ? tables_->ball3[v] : tables_->closed_nbhd[v];

  for (Vertex u : affected) deficiency_ -= violated(u);

  const std::int32_t step = adding ? 1 : -1;
  in_set_[v] = adding ? 1 : 0;
  size_ = adding ? size_ + 1 : size_ - 1;
  for (Vertex u : graph_->neighbors(v)) domcount_[u] += step;
  if (kind_ != VariantKind::TotalDomination) domcount_[v] += step;

  if (secure) {
    for (Vertex u : affected) defenders_[u] = in_set_[u] ? 0 : count_defenders(u);
  }

  for (Vertex u : affected) deficiency_ += violated(u);
}

void CriterionState::add_vertex(Vertex v) {
  if (in_set_.at(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is already in the set");
  update(v, true);
}

void CriterionState::remove_vertex(Vertex v) {
  if (!in_set_.at(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the set");
  update(v, false);
}

std::vector<Vertex> CriterionState::members() const {
  std::vector<Vertex> out;
  out.reserve(size_);
  for (Vertex v = 0; v < graph_->n(); ++v) {
    if (in_set_[v]) out.push_back(v);
  }
  return out;
}

namespace {

std::size_t neighbours_in(const Graph& g, Vertex v, std::span<const std::uint8_t> in_set) {
  std::size_t count = 0;
  for (Vertex w : g.neighbors(v)) count += in_set[w] ? 1 : 0;
  return count;
}

bool dominating(const Graph& g, std::span<const std::uint8_t> in_set) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!in_set[v] && neighbours_in(g, v, in_set) == 0) return false;
  }
  return true;
}

}  // namespace

bool naive_satisfied_mask(const Graph& g, VariantKind kind, std::span<const std::uint8_t> in_set) {
  switch (kind) {
    case VariantKind::Domination: return dominating(g, in_set);
    case VariantKind::TotalDomination:
      for (Vertex v = 0; v < g.n(); ++v) {
        if (neighbours_in(g, v, in_set) == 0) return false;
      }
      return true;
    case VariantKind::TwoDomination:
      for (Vertex v = 0; v < g.n(); ++v) {
        if (!in_set[v] && neighbours_in(g, v, in_set) < 2) return false;
      }
      return true;
    case VariantKind::SecureDomination: {
      if (!dominating(g, in_set)) return false;
      std::vector<std::uint8_t> swapped(in_set.begin(), in_set.end());
      for (Vertex v = 0; v < g.n(); ++v) {
        if (in_set[v]) continue;
        bool defended = false;
        for (Vertex w : g.neighbors(v)) {
          if (!in_set[w]) continue;
          swapped[w] = 0;
          swapped[v] = 1;
          defended = dominating(g, swapped);
          swapped[w] = 1;
          swapped[v] = 0;
          if (defended) break;
        }
        if (!defended) return false;
      }
      return true;
    }
  }
  return false;
}

bool naive_satisfied(const Graph& g, VariantKind kind, std::span<const Vertex> set) {
  std::vector<std::uint8_t> mask(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : set) mask.at(v) = 1;
  return naive_satisfied_mask(g, kind, mask);
}

}  // namespace cedom

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cedom/graph.hpp"

namespace cedom {

enum class VariantKind { Domination, TotalDomination, TwoDomination, SecureDomination };

inline constexpr VariantKind kAllVariants[] = {
    VariantKind::Domination, VariantKind::TotalDomination, VariantKind::TwoDomination,
    VariantKind::SecureDomination};

/// Short CLI name: dom, total, 2dom, secure.
std::string_view variant_name(VariantKind kind);
std::optional<VariantKind> parse_variant(std::string_view name);

/// The instance admits no set satisfying the requested criterion.
class InfeasibleInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Only total domination can be infeasible (isolated vertices).
bool is_feasible(const Graph& g, VariantKind kind);
void require_feasible(const Graph& g, VariantKind kind);

/// Incrementally maintained domination criterion for a vertex set S.
///
/// domcount(v) counts S-members in N[v], except for total domination where
/// the open neighbourhood N(v) is used. The deficiency is the number of
/// vertices currently violating the criterion, so satisfaction is a single
/// comparison with zero. Vertices in S never violate the 2-domination or
/// secure criteria.
///
/// For secure domination each vertex outside S also carries the number of
/// S-neighbours capable of defending it; an undominated vertex has none and
/// therefore counts once towards the deficiency. Adding or removing a vertex
/// recomputes these counts over its distance-3 ball.
///
/// The graph and tables are referenced, not copied, and must outlive the
/// state.
class CriterionState {
 public:
  CriterionState(const Graph& g, const NeighborhoodTables& tables, VariantKind kind);

  VariantKind kind() const { return kind_; }
  const Graph& graph() const { return *graph_; }

  /// Throws std::invalid_argument if v is already in S.
  void add_vertex(Vertex v);
  /// Throws std::invalid_argument if v is not in S.
  void remove_vertex(Vertex v);

  bool is_satisfied() const { return deficiency_ == 0; }
  std::size_t deficiency() const { return deficiency_; }
  std::size_t set_size() const { return size_; }
  bool contains(Vertex v) const { return in_set_[v] != 0; }
  std::int32_t domcount(Vertex v) const { return domcount_[v]; }
  /// Always zero for vertices in S and for non-secure variants.
  std::int32_t defender_count(Vertex v) const { return defenders_[v]; }

  /// True iff w is in S, v is an outside neighbour of w, and swapping w
  /// for v leaves every vertex dominated. Out-of-contract inputs yield false.
  bool capable_of_defending(Vertex w, Vertex v) const;

  /// Sorted members of S.
  std::vector<Vertex> members() const;

  /// Resets to S = {}.
  void clear();

  friend bool operator==(const CriterionState& a, const CriterionState& b) {
    return a.graph_ == b.graph_ && a.kind_ == b.kind_ && a.size_ == b.size_ &&
           a.deficiency_ == b.deficiency_ && a.in_set_ == b.in_set_ &&
           a.domcount_ == b.domcount_ && a.defenders_ == b.defenders_;
  }

 private:
  bool violated(Vertex v) const;
  std::int32_t closed_count(Vertex v) const;
  bool defends(Vertex w, Vertex v) const;
  std::int32_t count_defenders(Vertex v) const;
  void update(Vertex v, bool adding);

  const Graph* graph_;
  const NeighborhoodTables* tables_;
  VariantKind kind_;
  std::vector<std::uint8_t> in_set_;
  std::vector<std::int32_t> domcount_;
  std::vector<std::int32_t> defenders_;
  std::size_t size_ = 0;
  std::size_t deficiency_ = 0;
};

/// Reference checkers that evaluate the definitions from scratch. They share
/// no code with CriterionState and serve as its test oracle.
bool naive_satisfied(const Graph& g, VariantKind kind, std::span<const Vertex> set);
bool naive_satisfied_mask(const Graph& g, VariantKind kind, std::span<const std::uint8_t> in_set);

}  // namespace cedom

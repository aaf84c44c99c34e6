#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cedom {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised when an edge list cannot form a simple graph.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Compressed row storage for per-vertex vertex lists.
class VertexLists {
 public:
  VertexLists() = default;
  explicit VertexLists(const std::vector<std::vector<Vertex>>& lists);

  std::span<const Vertex> operator[](Vertex v) const {
    return {data_.data() + offsets_[v], data_.data() + offsets_[v + 1]};
  }
  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t total() const { return data_.size(); }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> data_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Builds the graph from an arbitrary edge list. Duplicate pairs (in
  /// either orientation) collapse; self-loops and out-of-range endpoints
  /// throw GraphError.
  Graph(Vertex n, std::span<const Edge> edges);

  Vertex n() const { return n_; }
  std::size_t m() const { return edges_.size(); }

  /// Sorted neighbour list N(v).
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  Vertex degree(Vertex v) const { return static_cast<Vertex>(adjacency_[v].size()); }
  Vertex max_degree() const;

  bool adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  VertexLists adjacency_;
};

Graph build_graph(Vertex n, std::span<const Edge> edges);

/// Closed neighbourhoods N[v] and distance-3 balls, both sorted and both
/// containing v itself.
struct NeighborhoodTables {
  VertexLists closed_nbhd;
  VertexLists ball3;
};

NeighborhoodTables build_tables(const Graph& g);

bool has_isolated_vertex(const Graph& g);

/// Breadth-first distances from `source`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

bool is_connected(const Graph& g);

}  // namespace cedom

#include "cedom/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace cedom {

VertexLists::VertexLists(const std::vector<std::vector<Vertex>>& lists) {
  offsets_.reserve(lists.size() + 1);
  for (const auto& list : lists) {
    data_.insert(data_.end(), list.begin(), list.end());
    offsets_.push_back(data_.size());
  }
}

Graph::Graph(Vertex n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw GraphError("vertex count must be non-negative");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       "): endpoint out of range [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  adjacency_ = VertexLists(adj);
}

Vertex Graph::max_degree() const {
  Vertex best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(Vertex n, std::span<const Edge> edges) { return Graph(n, edges); }

NeighborhoodTables build_tables(const Graph& g) {
  const Vertex n = g.n();
  std::vector<std::vector<Vertex>> closed(static_cast<std::size_t>(n));
  std::vector<std::vector<Vertex>> balls(static_cast<std::size_t>(n));

  // Truncated BFS to depth 3 from every vertex; `stamp` avoids clearing.
  std::vector<Vertex> stamp(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> frontier, next;
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    closed[v].assign(nb.begin(), nb.end());
    closed[v].insert(std::lower_bound(closed[v].begin(), closed[v].end(), v), v);

    auto& ball = balls[v];
    ball.push_back(v);
    stamp[v] = v;
    frontier.assign(1, v);
    for (int depth = 0; depth < 3 && !frontier.empty(); ++depth) {
      next.clear();
      for (Vertex u : frontier) {
        for (Vertex w : g.neighbors(u)) {
          if (stamp[w] == v) continue;
          stamp[w] = v;
          ball.push_back(w);
          next.push_back(w);
        }
      }
      frontier.swap(next);
    }
    std::sort(ball.begin(), ball.end());
  }
  return {VertexLists(closed), VertexLists(balls)};
}

bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

}  // namespace cedom

#include "cedom/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cedom/rng.hpp"

namespace cedom {

Graph grid(Vertex rows, Vertex cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be at least 1");
  std::vector<Edge> edges;
  for (Vertex r = 0; r < rows; ++r) {
    for (Vertex c = 0; c < cols; ++c) {
      const Vertex v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return Graph(rows * cols, edges);
}

Graph flower_snark(Vertex k) {
  if (k < 3) throw std::invalid_argument("flower snark needs k >= 3");
  auto a = [](Vertex i) { return i; };
  auto b = [k](Vertex i) { return k + i; };
  auto c = [k](Vertex i) { return 2 * k + i; };
  auto d = [k](Vertex i) { return 3 * k + i; };

  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) {
    edges.emplace_back(b(i), a(i));
    edges.emplace_back(b(i), c(i));
    edges.emplace_back(b(i), d(i));
    edges.emplace_back(a(i), a((i + 1) % k));
    if (i + 1 < k) {
      edges.emplace_back(c(i), c(i + 1));
      edges.emplace_back(d(i), d(i + 1));
    }
  }
  edges.emplace_back(c(k - 1), d(0));
  edges.emplace_back(d(k - 1), c(0));
  return Graph(4 * k, edges);
}

std::vector<Point> random_points(Vertex count, double width, double height, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Point> points(static_cast<std::size_t>(count));
  for (auto& p : points) {
    p.x = rng.uniform() * width;
    p.y = rng.uniform() * height;
  }
  return points;
}

Graph disk_graph(const std::vector<Point>& points, double radius) {
  const double reach = 4.0 * radius * radius;  // (2r)^2
  std::vector<Edge> edges;
  const auto n = static_cast<Vertex>(points.size());
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const double dx = points[i].x - points[j].x;
      const double dy = points[i].y - points[j].y;
      if (dx * dx + dy * dy <= reach) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::optional<Graph> unit_disk(Vertex count, double radius, double width, double height,
                               std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("unit disk graph needs at least one point");
  if (!(radius > 0.0 && width > 0.0 && height > 0.0)) {
    throw std::invalid_argument("radius and box dimensions must be positive");
  }
  Graph g = disk_graph(random_points(count, width, height, seed), radius);
  if (!is_connected(g)) return std::nullopt;
  return g;
}

Graph erdos_renyi(Vertex n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("G(n, p) needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.uniform() < p) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

double average_degree(const Graph& g) {
  return g.n() == 0 ? 0.0 : 2.0 * static_cast<double>(g.m()) / g.n();
}

DegreeTargetedGraph erdos_renyi_with_degree(Vertex n, double degree, std::uint64_t start_seed,
                                            double tolerance, int max_attempts) {
  if (n < 2) throw std::invalid_argument("degree targeting needs n >= 2");
  const double p = std::clamp(degree / (n - 1), 0.0, 1.0);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const std::uint64_t seed = start_seed + static_cast<std::uint64_t>(attempt);
    Graph g = erdos_renyi(n, p, seed);
    const double avg = average_degree(g);
    if (std::abs(avg - degree) <= tolerance) return {std::move(g), seed, avg};
  }
  throw std::runtime_error("no seed produced the requested average degree");
}

namespace {

std::string trim_number(double x) {
  std::ostringstream out;
  out << x;
  return out.str();
}

}  // namespace

std::string grid_name(Vertex rows, Vertex cols) {
  return "G(" + std::to_string(rows) + "," + std::to_string(cols) + ")";
}

std::string flower_snark_name(Vertex k) { return "J(" + std::to_string(k) + ")"; }

std::string unit_disk_name(Vertex count, double radius, double width, double height, std::uint64_t seed) {
  return "UDG_" + std::to_string(count) + "-" + trim_number(radius) + "-" + trim_number(width) + "-" +
         trim_number(height) + "_" + std::to_string(seed);
}

std::string erdos_renyi_name(Vertex n, double degree) {
  return "random" + std::to_string(n) + "_" + trim_number(degree);
}

}  // namespace cedom

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cedom/graph.hpp"

namespace cedom {

/// Square or rectangular grid: vertex r * cols + c, 4-neighbour adjacency.
Graph grid(Vertex rows, Vertex cols);

/// Isaacs flower snark J(k) on 4k vertices. With ids A_i = i, B_i = k + i,
/// C_i = 2k + i, D_i = 3k + i: hub B_i joins A_i, C_i, D_i; the A_i form a
/// k-cycle; C_0..C_{k-1} D_0..D_{k-1} form one 2k-cycle.
Graph flower_snark(Vertex k);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// `count` points uniform in [0, width) x [0, height).
std::vector<Point> random_points(Vertex count, double width, double height, std::uint64_t seed);

/// Pairs at Euclidean distance <= 2 * radius become edges.
Graph disk_graph(const std::vector<Point>& points, double radius);

/// Unit disk graph from seeded random points. Returns std::nullopt when the
/// sample is disconnected; the caller decides whether to retry.
std::optional<Graph> unit_disk(Vertex count, double radius, double width, double height,
                               std::uint64_t seed);

/// G(n, p): each pair independently with probability p.
Graph erdos_renyi(Vertex n, double p, std::uint64_t seed);

struct DegreeTargetedGraph {
  Graph graph;
  std::uint64_t seed = 0;  // accepted seed
  double average_degree = 0.0;
};

/// Draws G(n, d / (n - 1)) for seeds start_seed, start_seed + 1, ... until the
/// average degree is within `tolerance` of d. Throws std::runtime_error after
/// `max_attempts` failures.
DegreeTargetedGraph erdos_renyi_with_degree(Vertex n, double degree, std::uint64_t start_seed,
                                            double tolerance = 0.1, int max_attempts = 10000);

double average_degree(const Graph& g);

std::string grid_name(Vertex rows, Vertex cols);
std::string flower_snark_name(Vertex k);
/// UDG_c-r-m-n_s
std::string unit_disk_name(Vertex count, double radius, double width, double height, std::uint64_t seed);
/// randomN_d
std::string erdos_renyi_name(Vertex n, double degree);

}  // namespace cedom

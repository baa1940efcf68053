#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "dowker/dissimilarity.hpp"

namespace dowker {

/// Finite points of a common dimension >= 1.
struct PointCloud {
  std::vector<std::vector<double>> points;

  std::size_t size() const noexcept { return points.size(); }
  std::size_t dimension() const noexcept {
    return points.empty() ? 0 : points.front().size();
  }
  friend bool operator==(const PointCloud&, const PointCloud&) = default;
};

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  double weight = 1.0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct WeightedGraph {
  std::size_t node_count = 0;
  std::vector<Edge> edges;
  bool directed = false;
  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;
};

/// Throws InputError unless all coordinates are finite and dimensions agree.
void validate(const PointCloud& cloud);
/// Throws InputError on out-of-range nodes, self-loops, or bad weights.
void validate(const WeightedGraph& graph);

// Text formats: one record per line, comma and/or whitespace separated,
// `#` starts a comment, `inf` denotes infinity. Edge lists may carry the
// directives `# nodes N` and `# directed` as their first comment lines.
PointCloud parse_point_cloud(std::istream& in);
DowkerDissimilarity parse_distance_matrix(std::istream& in,
                                          bool declared_metric = true);
WeightedGraph parse_edge_list(std::istream& in);

PointCloud read_point_cloud(const std::filesystem::path& path);
DowkerDissimilarity read_distance_matrix(const std::filesystem::path& path,
                                         bool declared_metric = true);
WeightedGraph read_edge_list(const std::filesystem::path& path);

void write_point_cloud(std::ostream& out, const PointCloud& cloud);
void write_distance_matrix(std::ostream& out, const DowkerDissimilarity& m);
void write_edge_list(std::ostream& out, const WeightedGraph& graph);

/// Euclidean distances; square, symmetric, zero diagonal.
DowkerDissimilarity distance_matrix(const PointCloud& cloud);

/// All-pairs shortest paths (Dijkstra from each source); inf when unreachable.
DowkerDissimilarity shortest_path_matrix(const WeightedGraph& graph);

/// Adjacency weights: 0 on the diagonal, the lightest edge weight between
/// adjacent nodes, inf elsewhere.
DowkerDissimilarity raw_weight_matrix(const WeightedGraph& graph);

enum class GraphKind {
  cycle,
  star,
  wheel,
  ladder,
  circular_ladder,
  grid,
  complete_multipartite
};

GraphKind parse_graph_kind(const std::string& name);
std::string to_string(GraphKind kind);

/// Unit-weight undirected graphs with the usual node numbering:
///   cycle {n}, star {n} (hub 0), wheel {n} (hub 0), ladder {rungs},
///   circular_ladder {rungs}, grid {rows, cols}, complete_multipartite {sizes...}.
/// Ladders put one rail on 0..r-1 and the other on r..2r-1; grids are
/// row-major. Throws InputError on bad parameters.
WeightedGraph generate_graph(GraphKind kind,
                             const std::vector<std::size_t>& params);

/// n points (cos u, sin u, cos v, sin v) / sqrt(2), u and v uniform on
/// [0, 2 pi) from a seeded 64-bit Mersenne twister.
PointCloud sample_clifford_torus(std::size_t n, std::uint64_t seed);

}  // namespace dowker

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eccspec/errors.hpp"

namespace eccspec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Hop distance reported for vertices that a BFS cannot reach.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. Edges are stored normalized (u < v) and sorted;
/// neighbor lists are sorted ascending.
class Graph {
 public:
  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) collapse; self-loops and out-of-range ids throw GraphError.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Same vertex set and edge set (labelled equality, not isomorphism).
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Graph(int n, std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// All-pairs hop distances of a connected graph plus derived eccentricities.
struct Metric {
  int n = 0;
  std::vector<int> dist;  // row-major n x n
  std::vector<int> ecc;
  int diam = 0;
  int rad = 0;

  int operator()(Vertex u, Vertex v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
};

/// Parses "u v" lines with an optional leading vertex-count line.
/// Blank lines and lines starting with '#' are ignored. Without a header the
/// order is one more than the largest id seen.
Graph parse_edge_list(std::string_view text);

/// Decodes a graph6 string. A leading ">>graph6<<" header and surrounding
/// whitespace are ignored.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

std::vector<int> bfs_distances(const Graph& g, Vertex source);
bool is_connected(const Graph& g);

/// Throws DisconnectedError when g is disconnected.
Metric metric(const Graph& g);

}  // namespace eccspec

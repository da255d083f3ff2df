#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "eccspec/graph.hpp"

namespace eccspec {

enum class Family {
  Star,
  Path,
  Cycle,
  Complete,
  CompleteBipartite,
  CompleteMultipartite,
  Crown,
  RandomConnected,
};

struct FamilySpec {
  Family family = Family::Star;
  std::vector<int> params;  // n, or (p, q), or part sizes
  double edge_prob = 0.5;   // RandomConnected only
  std::uint64_t seed = 0;   // RandomConnected only
};

/// Parses "name:params", e.g. "star:5", "complete_bipartite:2,3",
/// "multipartite:2,2,2", "crown:4", "random:30,0.2,7".
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// Vertex labelling per family:
///   star      vertex 0 is the centre
///   path      0-1-...-(n-1); cycle closes (n-1)-0
///   bipartite part A = 0..p-1, part B = p..p+q-1
///   multipartite parts occupy consecutive blocks in the given order
///   crown     A = 0..n-1, B = n..2n-1, i joined to n+j for all i != j
Graph make_family(const FamilySpec& spec);

Graph star(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int p, int q);
Graph complete_multipartite(const std::vector<int>& parts);
Graph crown(int n);

/// Erdos-Renyi G(n, p), redrawn until connected. Deterministic per seed.
Graph random_connected_graph(int n, double edge_prob, std::uint64_t seed);

/// Isomorphism certificate: graph6 of the lexicographically smallest
/// relabelling reachable by colour refinement plus individualization.
std::string canonical_form(const Graph& g);
inline constexpr int kCanonicalMaxOrder = 64;

bool is_bipartite(const Graph& g);
bool is_star(const Graph& g);
/// Part sizes (descending) when g is complete multipartite with >= 2 parts.
std::optional<std::vector<int>> complete_multipartite_parts(const Graph& g);

enum class TreeMethod { Auto, Prufer, LevelSequence };

inline constexpr int kMaxTreeOrder = 14;
inline constexpr int kPruferMaxOrder = 9;

/// Lazy stream of pairwise non-isomorphic trees on n vertices.
class TreeEnumerator {
 public:
  explicit TreeEnumerator(int n, TreeMethod method = TreeMethod::Auto);
  ~TreeEnumerator();
  TreeEnumerator(TreeEnumerator&&) noexcept;
  TreeEnumerator& operator=(TreeEnumerator&&) noexcept;

  std::optional<Graph> next();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

inline constexpr int kMaxConnectedOrder = 7;
inline constexpr int kMaxConnectedOrderOverride = 8;

/// Lazy stream of pairwise non-isomorphic connected graphs on n vertices,
/// found by scanning labelled graphs and deduplicating canonical forms.
/// n = 8 requires allow_large (several minutes of work).
class ConnectedGraphEnumerator {
 public:
  explicit ConnectedGraphEnumerator(int n, bool allow_large = false);
  std::optional<Graph> next();

 private:
  int n_;
  int bits_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_;
  std::vector<std::pair<int, int>> slots_;
  std::unordered_set<std::string> seen_;
};

std::vector<Graph> all_trees(int n, TreeMethod method = TreeMethod::Auto);
std::vector<Graph> all_connected_graphs(int n, bool allow_large = false);

/// Process-wide memoized corpus. When cache_dir is non-empty, the corpus is
/// read from / written to "<cache_dir>/<kind>-<n>.g6".
const std::vector<Graph>& connected_graph_corpus(int n, const std::filesystem::path& cache_dir = {},
                                                 bool allow_large = false);
const std::vector<Graph>& tree_corpus(int n, const std::filesystem::path& cache_dir = {});

}  // namespace eccspec

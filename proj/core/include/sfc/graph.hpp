#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sfc/tree.hpp"

namespace sfc {

inline constexpr std::uint64_t kDefaultPairingAttempts = 1'000'000;

/// Immutable simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  /// Throws BadParameters on loops, duplicate edges or out-of-range vertices.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Sorted (u < v), lexicographic.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  bool is_connected() const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  Graph(int n, std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
Graph hypercube_graph(int dim);
/// Vertices of `second` are shifted by first.size().
Graph disjoint_union(const Graph& first, const Graph& second);

struct RegularGraphSample {
  Graph graph;
  std::uint64_t attempts = 0;
};

/// Uniform simple d-regular graph from the pairing model. Points are matched
/// in order and a trial is abandoned as soon as it produces a loop or a
/// repeated edge, which rejects exactly the non-simple pairings.
/// Throws BadParameters (n d odd, d >= n) or RejectionBudgetExceeded.
RegularGraphSample random_regular(int n, int d, std::uint64_t seed,
                                  std::uint64_t max_attempts = kDefaultPairingAttempts);

Graph parse_graph(const std::string& text);
std::string to_edge_list(const Graph& g);

/// Same graph viewed as a tree; throws NotATree.
Tree as_tree(const Graph& g);

}  // namespace sfc

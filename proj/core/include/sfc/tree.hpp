#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sfc {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable tree on vertices 0..n-1. Edges are stored normalized (u < v) in
/// input order; adjacency lists are sorted.
class Tree {
 public:
  /// Validates and builds; throws NotATree naming the violation.
  static Tree from_edges(int n, std::span<const Edge> edges);

  int size() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  /// Edges sorted lexicographically; identifies a labelled tree.
  std::vector<Edge> sorted_edges() const;

  /// Tree with vertex v renamed to perm[v]. perm must be a permutation.
  Tree relabeled(std::span<const Vertex> perm) const;

 private:
  Tree(int n, std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

inline Tree tree_from_edges(int n, std::span<const Edge> edges) { return Tree::from_edges(n, edges); }

struct RootedTree {
  RootedTree(Tree t, Vertex r);

  Tree tree;
  Vertex root;
};

/// Balanced-parenthesis canonical code. Rooted codes are "(" + sorted child
/// codes + ")"; free codes carry a leading '1' or '2' center tag.
struct CanonCode {
  std::string bytes;

  auto operator<=>(const CanonCode&) const = default;
  bool operator==(const CanonCode&) const = default;
};

struct DegreeStats {
  int max_degree = 0;
  int leaf_count = 0;

  bool operator==(const DegreeStats&) const = default;
};

/// Throws SingleVertex when n = 1.
DegreeStats degree_stats(const Tree& t);

CanonCode ahu_canon(const RootedTree& rt);

/// Rooted code of the component of `root` after deleting the edge to
/// `excluded` (pass -1 to keep the whole tree).
CanonCode ahu_canon(const Tree& t, Vertex root, Vertex excluded = -1);

/// One or two vertices of minimum eccentricity, ascending.
std::vector<Vertex> center(const Tree& t);

CanonCode canon_free(const Tree& t);

bool is_isomorphic(const Tree& a, const Tree& b);

/// Tree built from Prüfer sequence over {0..n-1}; n = seq.size() + 2.
Tree tree_from_pruefer(std::span<const int> seq);

// Text format: "n m" header then m lines "u v" (u < v). The single-line
// variant packs everything on one line: "n m  u v  u v ...".
std::string to_edge_list(const Tree& t);
std::string to_single_line(const Tree& t);
Tree parse_tree(const std::string& text);
std::vector<Tree> parse_tree_lines(const std::string& text);

}  // namespace sfc

template <>
struct std::hash<sfc::CanonCode> {
  std::size_t operator()(const sfc::CanonCode& c) const noexcept { return std::hash<std::string>{}(c.bytes); }
};

#include "sfc/tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "sfc/edge_list.hpp"
#include "sfc/error.hpp"

namespace sfc {
namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }

  std::vector<int> parent;
};

std::string edge_str(Edge e) { return std::to_string(e.first) + "-" + std::to_string(e.second); }

}  // namespace

Tree::Tree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(static_cast<std::size_t>(n)) {
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Tree Tree::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) throw Error(ErrorKind::NotATree, "vertex count must be positive, got " + std::to_string(n));
  if (edges.size() != static_cast<std::size_t>(n - 1)) {
    throw Error(ErrorKind::NotATree, "wrong edge count: " + std::to_string(edges.size()) + " edges on " +
                                         std::to_string(n) + " vertices (need " + std::to_string(n - 1) + ")");
  }
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorKind::NotATree, "vertex out of range in edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    if (u == v) throw Error(ErrorKind::NotATree, "self-loop at vertex " + std::to_string(u));
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  {
    std::vector<Edge> sorted = normalized;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
      throw Error(ErrorKind::NotATree, "duplicate edge " + edge_str(*dup));
    }
  }
  DisjointSets dsu(n);
  for (Edge e : normalized) {
    if (!dsu.unite(e.first, e.second)) {
      // n-1 edges with a cycle always leave some vertex unreachable.
      throw Error(ErrorKind::NotATree, "cycle closed by edge " + edge_str(e) + " (graph is disconnected)");
    }
  }
  return Tree(n, std::move(normalized));
}

std::vector<Edge> Tree::sorted_edges() const {
  std::vector<Edge> out = edges_;
  std::sort(out.begin(), out.end());
  return out;
}

Tree Tree::relabeled(std::span<const Vertex> perm) const {
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (auto [u, v] : edges_) e.emplace_back(perm[u], perm[v]);
  return from_edges(n_, e);
}

RootedTree::RootedTree(Tree t, Vertex r) : tree(std::move(t)), root(r) {
  if (root < 0 || root >= tree.size()) {
    throw Error(ErrorKind::BadParameters,
                "root " + std::to_string(root) + " out of range for n=" + std::to_string(tree.size()));
  }
}

DegreeStats degree_stats(const Tree& t) {
  if (t.size() == 1) throw Error(ErrorKind::SingleVertex, "degree statistics are undefined for a single vertex");
  DegreeStats s;
  for (Vertex v = 0; v < t.size(); ++v) {
    s.max_degree = std::max(s.max_degree, t.degree(v));
    if (t.degree(v) == 1) ++s.leaf_count;
  }
  return s;
}

CanonCode ahu_canon(const Tree& t, Vertex root, Vertex excluded) {
  const int n = t.size();
  std::vector<Vertex> order;
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  order.reserve(static_cast<std::size_t>(n));
  order.push_back(root);
  parent[root] = root;
  if (excluded >= 0) parent[excluded] = excluded;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : t.neighbors(order[i])) {
      if (parent[w] == -1) {
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }

  std::vector<std::vector<std::string>> pending(static_cast<std::size_t>(n));
  std::string code;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    auto& kids = pending[v];
    std::sort(kids.begin(), kids.end());
    std::size_t len = 2;
    for (const auto& k : kids) len += k.size();
    code.clear();
    code.reserve(len);
    code.push_back('(');
    for (const auto& k : kids) code += k;
    code.push_back(')');
    kids.clear();
    kids.shrink_to_fit();
    if (v == root) break;
    pending[parent[v]].push_back(std::move(code));
    code = std::string();
  }
  return CanonCode{std::move(code)};
}

CanonCode ahu_canon(const RootedTree& rt) { return ahu_canon(rt.tree, rt.root); }

std::vector<Vertex> center(const Tree& t) {
  const int n = t.size();
  if (n <= 2) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      deg[leaf] = 0;
      for (Vertex w : t.neighbors(leaf)) {
        if (deg[w] > 0 && --deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

CanonCode canon_free(const Tree& t) {
  auto c = center(t);
  if (c.size() == 1) return CanonCode{"1" + ahu_canon(t, c[0]).bytes};
  auto left = ahu_canon(t, c[0], c[1]).bytes;
  auto right = ahu_canon(t, c[1], c[0]).bytes;
  if (right < left) std::swap(left, right);
  return CanonCode{"2" + left + right};
}

bool is_isomorphic(const Tree& a, const Tree& b) {
  if (a.size() != b.size()) return false;
  return canon_free(a) == canon_free(b);
}

Tree tree_from_pruefer(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int x : seq) {
    if (x < 0 || x >= n) throw Error(ErrorKind::BadParameters, "Pruefer entry out of range");
    ++deg[x];
  }
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 1) leaves.insert(v);
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (int x : seq) {
    Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, x);
    if (--deg[x] == 1) leaves.insert(x);
  }
  Vertex u = *leaves.begin();
  Vertex v = *std::next(leaves.begin());
  edges.emplace_back(u, v);
  return Tree::from_edges(n, edges);
}

std::string to_edge_list(const Tree& t) { return format_edge_list(t.size(), t.edges(), false); }

std::string to_single_line(const Tree& t) { return format_edge_list(t.size(), t.edges(), true); }

Tree parse_tree(const std::string& text) {
  EdgeList el = parse_edge_list(text);
  return Tree::from_edges(el.n, el.edges);
}

std::vector<Tree> parse_tree_lines(const std::string& text) {
  std::vector<Tree> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_tree(line));
  }
  return out;
}

}  // namespace sfc

#include "sfc/graph.hpp"

#include <algorithm>

#include "sfc/edge_list.hpp"
#include "sfc/error.hpp"
#include "sfc/rng.hpp"

namespace sfc {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(static_cast<std::size_t>(n)) {
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) throw Error(ErrorKind::BadParameters, "graph needs at least one vertex");
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorKind::BadParameters, "vertex out of range in edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    if (u == v) throw Error(ErrorKind::BadParameters, "self-loop at vertex " + std::to_string(u));
    norm.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(norm.begin(), norm.end());
  if (auto dup = std::adjacent_find(norm.begin(), norm.end()); dup != norm.end()) {
    throw Error(ErrorKind::BadParameters,
                "duplicate edge " + std::to_string(dup->first) + "-" + std::to_string(dup->second));
  }
  return Graph(n, std::move(norm));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::is_connected() const {
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::BadParameters, "a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw Error(ErrorKind::BadParameters, "both sides of K_{a,b} must be nonempty");
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  }
  return Graph::from_edges(a + b, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, e);
}

Graph hypercube_graph(int dim) {
  if (dim < 1 || dim > 20) throw Error(ErrorKind::BadParameters, "hypercube dimension must be in [1, 20]");
  const int n = 1 << dim;
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) {
    for (int bit = 0; bit < dim; ++bit) {
      int w = v ^ (1 << bit);
      if (v < w) e.emplace_back(v, w);
    }
  }
  return Graph::from_edges(n, e);
}

Graph disjoint_union(const Graph& first, const Graph& second) {
  std::vector<Edge> e = first.edges();
  const int shift = first.size();
  for (auto [u, v] : second.edges()) e.emplace_back(u + shift, v + shift);
  return Graph::from_edges(first.size() + second.size(), e);
}

RegularGraphSample random_regular(int n, int d, std::uint64_t seed, std::uint64_t max_attempts) {
  if (n < 1 || d < 0 || d >= n) {
    throw Error(ErrorKind::BadParameters, "random regular graph needs 0 <= d < n");
  }
  if ((static_cast<long long>(n) * d) % 2 != 0) throw Error(ErrorKind::BadParameters, "n*d must be even");

  Rng rng(seed);
  const int points = n * d;
  std::vector<int> unmatched(static_cast<std::size_t>(points));
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (std::uint64_t attempt = 1; attempt <= max_attempts; ++attempt) {
    for (int i = 0; i < points; ++i) unmatched[i] = i;
    edges.clear();
    for (auto& nb : adj) nb.clear();
    int remaining = points;
    bool simple = true;
    while (remaining > 0) {
      // Pair the last unmatched point with a uniformly chosen other one.
      const int u_point = unmatched[remaining - 1];
      const auto pick = static_cast<int>(rng.below(static_cast<std::uint64_t>(remaining - 1)));
      const int v_point = unmatched[pick];
      unmatched[pick] = unmatched[remaining - 2];
      remaining -= 2;
      const Vertex u = u_point / d;
      const Vertex v = v_point / d;
      if (u == v || std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) {
        simple = false;
        break;
      }
      adj[u].push_back(v);
      adj[v].push_back(u);
      edges.emplace_back(u, v);
    }
    if (simple) return {Graph::from_edges(n, edges), attempt};
  }
  throw Error(ErrorKind::RejectionBudgetExceeded,
              "no simple pairing for n=" + std::to_string(n) + ", d=" + std::to_string(d) + " within " +
                  std::to_string(max_attempts) + " attempts");
}

Graph parse_graph(const std::string& text) {
  EdgeList el = parse_edge_list(text);
  return Graph::from_edges(el.n, el.edges);
}

std::string to_edge_list(const Graph& g) { return format_edge_list(g.size(), g.edges(), false); }

Tree as_tree(const Graph& g) { return Tree::from_edges(g.size(), g.edges()); }

}  // namespace sfc

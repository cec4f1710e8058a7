#include "sfc/census.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "sfc/enumeration.hpp"
#include "sfc/error.hpp"

namespace sfc {

std::uint64_t default_tree_cap() {
  if (const char* env = std::getenv("SFC_CAP_TREES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultTreeCap;
}

BigInt kirchhoff_count(const Graph& g, int cap) {
  const int n = g.size();
  if (n > cap) throw Error(ErrorKind::TooLarge, "n=" + std::to_string(n) + " exceeds the matrix cap " + std::to_string(cap));
  if (n == 1) return 1;
  const int m = n - 1;  // delete row/column 0
  std::vector<BigInt> a(static_cast<std::size_t>(m) * m);
  auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * m + j]; };
  for (Vertex v = 1; v < n; ++v) at(v - 1, v - 1) = g.degree(v);
  for (auto [u, v] : g.edges()) {
    if (u > 0 && v > 0) {
      at(u - 1, v - 1) = -1;
      at(v - 1, u - 1) = -1;
    }
  }

  BigInt prev_pivot = 1;
  int sign = 1;
  for (int k = 0; k < m; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < m; ++i) {
        if (at(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      for (int j = 0; j < m; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j < m; ++j) {
        // a_ij <- (a_kk a_ij - a_ik a_kj) / prev_pivot, exact by Sylvester's identity.
        BigInt& x = at(i, j);
        x *= at(k, k);
        mpz_submul(x.get_mpz_t(), at(i, k).get_mpz_t(), at(k, j).get_mpz_t());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev_pivot = at(k, k);
  }
  BigInt det = at(m - 1, m - 1);
  return sign > 0 ? det : BigInt(-det);
}

namespace {

// Union-find with rollback: union by size, no path compression.
class RollbackSets {
 public:
  explicit RollbackSets(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
  }
  void undo() {
    int b = history_.back();
    history_.pop_back();
    int a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

struct SearchNode {
  std::size_t next_edge = 0;
  std::vector<char> alive;
  std::vector<std::size_t> chosen;
};

class SpanningTreeSearch {
 public:
  explicit SpanningTreeSearch(const Graph& g)
      : g_(g), edges_(g.edges()), incident_(static_cast<std::size_t>(g.size())) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      incident_[edges_[i].first].push_back(i);
      incident_[edges_[i].second].push_back(i);
    }
  }

  std::size_t edge_count() const { return edges_.size(); }

  // Expands nodes breadth-first until at least `want` subproblems exist or
  // every node is past `max_depth`. Sequential order is preserved.
  std::vector<SearchNode> frontier(std::size_t want, std::size_t max_depth) const {
    std::vector<SearchNode> layer(1);
    layer[0].alive.assign(edges_.size(), 1);
    while (layer.size() < want) {
      std::vector<SearchNode> next;
      bool expanded = false;
      for (auto& node : layer) {
        if (node.next_edge >= max_depth || node.next_edge >= edges_.size() ||
            node.chosen.size() + 1 == static_cast<std::size_t>(g_.size())) {
          next.push_back(std::move(node));
          continue;
        }
        expanded = true;
        RollbackSets sets = sets_for(node.chosen);
        auto [can_include, can_exclude] = options(node, sets);
        if (can_include) {
          SearchNode inc = node;
          inc.chosen.push_back(node.next_edge);
          ++inc.next_edge;
          next.push_back(std::move(inc));
        }
        if (can_exclude) {
          SearchNode exc = std::move(node);
          exc.alive[exc.next_edge] = 0;
          ++exc.next_edge;
          next.push_back(std::move(exc));
        }
      }
      layer = std::move(next);
      if (!expanded) break;
    }
    return layer;
  }

  void run(SearchNode node, const std::function<void(const Tree&)>& visit) const {
    RollbackSets sets = sets_for(node.chosen);
    recurse(node, sets, visit);
  }

 private:
  RollbackSets sets_for(const std::vector<std::size_t>& chosen) const {
    RollbackSets sets(g_.size());
    for (std::size_t e : chosen) sets.unite(edges_[e].first, edges_[e].second);
    return sets;
  }

  std::pair<bool, bool> options(const SearchNode& node, const RollbackSets& sets) const {
    const auto [u, v] = edges_[node.next_edge];
    const bool closes_cycle = sets.find(u) == sets.find(v);
    if (closes_cycle) return {false, true};
    if (is_bridge(node, node.next_edge)) return {true, false};
    return {true, true};
  }

  // Is edge e the only u-v connection among the alive edges?
  bool is_bridge(const SearchNode& node, std::size_t e) const {
    const auto [u, v] = edges_[e];
    std::vector<char>& seen = scratch_seen();
    std::vector<Vertex>& stack = scratch_stack();
    seen.assign(static_cast<std::size_t>(g_.size()), 0);
    stack.clear();
    stack.push_back(u);
    seen[u] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (std::size_t f : incident_[x]) {
        if (f == e || !node.alive[f]) continue;
        Vertex y = edges_[f].first == x ? edges_[f].second : edges_[f].first;
        if (y == v) return false;
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    return true;
  }

  void recurse(SearchNode& node, RollbackSets& sets, const std::function<void(const Tree&)>& visit) const {
    if (node.chosen.size() + 1 == static_cast<std::size_t>(g_.size())) {
      std::vector<Edge> te;
      te.reserve(node.chosen.size());
      for (std::size_t e : node.chosen) te.push_back(edges_[e]);
      visit(Tree::from_edges(g_.size(), te));
      return;
    }
    const std::size_t e = node.next_edge;
    auto [can_include, can_exclude] = options(node, sets);
    ++node.next_edge;
    if (can_include) {
      node.chosen.push_back(e);
      sets.unite(edges_[e].first, edges_[e].second);
      recurse(node, sets, visit);
      sets.undo();
      node.chosen.pop_back();
    }
    if (can_exclude) {
      node.alive[e] = 0;
      recurse(node, sets, visit);
      node.alive[e] = 1;
    }
    --node.next_edge;
  }

  static std::vector<char>& scratch_seen() {
    thread_local std::vector<char> seen;
    return seen;
  }
  static std::vector<Vertex>& scratch_stack() {
    thread_local std::vector<Vertex> stack;
    return stack;
  }

  const Graph& g_;
  const std::vector<Edge>& edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

void preflight(std::uint64_t cap, const BigInt& count) {
  if (count == 0) throw Error(ErrorKind::Disconnected, "graph is disconnected; it has no spanning tree");
  if (count > BigInt(std::to_string(cap))) {
    throw Error(ErrorKind::OverCap, "graph has " + to_decimal(count) + " spanning trees, above the cap " +
                                        std::to_string(cap));
  }
}

}  // namespace

void enumerate_spanning_trees(const Graph& g, std::uint64_t cap, const std::function<void(const Tree&)>& visit) {
  const BigInt count = kirchhoff_count(g);
  preflight(cap, count);
  SpanningTreeSearch search(g);
  SearchNode root;
  root.alive.assign(search.edge_count(), 1);
  search.run(std::move(root), visit);
}

SpanningTreeCensus unlabelled_census(const Graph& g, std::uint64_t cap, std::optional<Rational> epsilon, int threads) {
  SpanningTreeCensus census;
  census.n = g.size();
  census.labelled_count = kirchhoff_count(g);
  preflight(cap, census.labelled_count);

  SpanningTreeSearch search(g);
  if (threads <= 1) {
    SearchNode root;
    root.alive.assign(search.edge_count(), 1);
    search.run(std::move(root), [&](const Tree& t) { census.classes[canon_free(t)] += 1; });
  } else {
    std::vector<SearchNode> work = search.frontier(static_cast<std::size_t>(threads) * 8, search.edge_count());
    std::atomic<std::size_t> next{0};
    std::mutex merge_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        std::map<CanonCode, BigInt> local;
        for (std::size_t i = next++; i < work.size(); i = next++) {
          search.run(std::move(work[i]), [&](const Tree& t) { local[canon_free(t)] += 1; });
        }
        std::lock_guard lock(merge_mutex);
        for (auto& [code, count] : local) census.classes[code] += count;
      });
    }
    for (auto& t : pool) t.join();
  }

  BigInt total = 0;
  for (const auto& [code, count] : census.classes) total += count;
  if (total != census.labelled_count) {
    throw Error(ErrorKind::InternalParityViolation, "class multiplicities sum to " + to_decimal(total) +
                                                        " but the determinant gives " + to_decimal(census.labelled_count));
  }
  census.distinct_unlabelled = census.classes.size();

  const BigInt distinct(std::to_string(census.distinct_unlabelled));
  census.lee.threshold = ceil_exp(make_rational(static_cast<long>(census.n), 2000));
  census.lee.pass = distinct >= census.lee.threshold;

  if (epsilon) {
    MainBoundComparison main;
    main.epsilon = *epsilon;
    main.base = OtterConstants::alpha_ref() - *epsilon;
    main.base.canonicalize();
    if (main.base <= 0) throw Error(ErrorKind::BadParameters, "epsilon must be below alpha_ref");
    const auto n = static_cast<unsigned long>(census.n);
    const BigInt pn = pow(main.base.get_num(), n);
    const BigInt qn = pow(main.base.get_den(), n);
    mpz_cdiv_q(main.threshold.get_mpz_t(), pn.get_mpz_t(), qn.get_mpz_t());
    main.threshold_digits = decimal_digits(main.threshold);
    main.pass = distinct * qn >= pn;
    census.main = std::move(main);
  }
  return census;
}

}  // namespace sfc

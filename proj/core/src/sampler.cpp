#include "sfc/sampler.hpp"

#include <cmath>
#include <mutex>
#include <thread>

#include "sfc/census.hpp"
#include "sfc/error.hpp"
#include "sfc/rng.hpp"

namespace sfc {
namespace {

Tree wilson_with(const Graph& g, Rng& rng, Vertex root) {
  const int n = g.size();
  std::vector<char> in_tree(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> next(static_cast<std::size_t>(n), -1);
  in_tree[root] = 1;
  for (Vertex start = 0; start < n; ++start) {
    // Walk until the tree is hit; overwriting next[] erases loops.
    for (Vertex u = start; !in_tree[u]; u = next[u]) {
      const auto& nb = g.neighbors(u);
      next[u] = nb[rng.below(nb.size())];
    }
    for (Vertex u = start; !in_tree[u]; u = next[u]) in_tree[u] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (Vertex v = 0; v < n; ++v) {
    if (v != root) edges.emplace_back(v, next[v]);
  }
  return Tree::from_edges(n, edges);
}

void require_connected(const Graph& g) {
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "graph is disconnected; it has no spanning tree");
}

void finish(ClassDistribution& dist) {
  for (const auto& [code, count] : dist.counts) {
    if (count > dist.max_class_count) dist.max_class_count = count;
  }
  mpq_class p(dist.max_class_count, dist.total);
  dist.max_class_prob = p.get_d();
}

}  // namespace

double ClassDistribution::frequency(const CanonCode& code) const {
  auto it = counts.find(code);
  if (it == counts.end()) return 0.0;
  mpq_class p(it->second, total);
  return p.get_d();
}

std::string ClassDistribution::frequency_decimal(const CanonCode& code, unsigned digits) const {
  auto it = counts.find(code);
  return divide_to_decimal(it == counts.end() ? BigInt(0) : it->second, total, digits).str();
}

Tree wilson_sample(const Graph& g, std::uint64_t seed, Vertex root) {
  require_connected(g);
  if (root < 0 || root >= g.size()) throw Error(ErrorKind::BadParameters, "root out of range");
  Rng rng(seed);
  return wilson_with(g, rng, root);
}

ClassDistribution class_distribution(const Graph& g, std::uint64_t samples, std::uint64_t seed, double epsilon,
                                     int threads, Vertex root) {
  require_connected(g);
  if (samples < 1) throw Error(ErrorKind::BadParameters, "need at least one sample");
  if (root < 0 || root >= g.size()) throw Error(ErrorKind::BadParameters, "root out of range");

  ClassDistribution dist;
  dist.n = g.size();
  dist.total = BigInt(std::to_string(samples));
  dist.seed = seed;
  dist.generator_id = std::string(Rng::kGeneratorId);
  dist.epsilon = epsilon;
  dist.threshold = std::exp(-(1.0 - epsilon) * g.size());

  auto draw_range = [&](std::uint64_t begin, std::uint64_t end, std::map<CanonCode, std::uint64_t>& local) {
    for (std::uint64_t i = begin; i < end; ++i) {
      Rng rng = Rng::stream(seed, i);
      ++local[canon_free(wilson_with(g, rng, root))];
    }
  };

  std::map<CanonCode, std::uint64_t> merged;
  if (threads <= 1 || samples < 2) {
    draw_range(0, samples, merged);
  } else {
    const auto workers = static_cast<std::uint64_t>(threads);
    std::vector<std::map<CanonCode, std::uint64_t>> partial(workers);
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] { draw_range(samples * w / workers, samples * (w + 1) / workers, partial[w]); });
    }
    for (auto& t : pool) t.join();
    for (auto& part : partial) {
      for (auto& [code, c] : part) merged[code] += c;
    }
  }
  for (auto& [code, c] : merged) dist.counts[code] = BigInt(std::to_string(c));
  finish(dist);
  return dist;
}

ClassDistribution exact_class_distribution(const Graph& g, std::uint64_t cap) {
  SpanningTreeCensus census = unlabelled_census(g, cap);
  ClassDistribution dist;
  dist.n = g.size();
  dist.total = census.labelled_count;
  dist.counts = std::move(census.classes);
  dist.exact = true;
  finish(dist);
  return dist;
}

}  // namespace sfc

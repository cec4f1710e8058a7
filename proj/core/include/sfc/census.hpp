#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "sfc/bigint.hpp"
#include "sfc/graph.hpp"
#include "sfc/tree.hpp"

namespace sfc {

inline constexpr int kDefaultKirchhoffCap = 500;
inline constexpr std::uint64_t kDefaultTreeCap = 1'000'000;

/// Tree-count cap honoring the SFC_CAP_TREES environment override.
std::uint64_t default_tree_cap();

/// Reduced-Laplacian determinant by fraction-free (Bareiss) elimination.
/// Throws TooLarge above cap.
BigInt kirchhoff_count(const Graph& g, int cap = kDefaultKirchhoffCap);

/// Emits every spanning tree exactly once. Edges are decided in the graph's
/// sorted edge order: an edge closing a cycle with the chosen edges is
/// excluded, a bridge of the remaining graph is included, anything else
/// branches include-first. Throws Disconnected, or OverCap with the exact
/// count when kirchhoff_count(g) > cap.
void enumerate_spanning_trees(const Graph& g, std::uint64_t cap, const std::function<void(const Tree&)>& visit);

struct BoundComparison {
  BigInt threshold;   // ceil of the bound
  bool pass = false;  // distinct_unlabelled >= bound
};

struct MainBoundComparison {
  Rational epsilon;
  Rational base;                   // alpha_ref - epsilon
  std::size_t threshold_digits = 0;  // decimal digits of ceil(base^n)
  BigInt threshold;                // ceil(base^n)
  bool pass = false;               // exact: distinct q^n >= p^n
};

struct SpanningTreeCensus {
  int n = 0;
  BigInt labelled_count;
  std::map<CanonCode, BigInt> classes;
  std::uint64_t distinct_unlabelled = 0;
  BoundComparison lee;  // against ceil(e^{n/2000})
  std::optional<MainBoundComparison> main;
};

/// `epsilon` (optional) enables the informational (alpha_ref - epsilon)^n
/// comparison. With threads > 1 the search is split on its first decisions;
/// the result does not depend on the thread count.
SpanningTreeCensus unlabelled_census(const Graph& g, std::uint64_t cap, std::optional<Rational> epsilon = std::nullopt,
                                     int threads = 1);

}  // namespace sfc

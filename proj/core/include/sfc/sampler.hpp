#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "sfc/bigint.hpp"
#include "sfc/graph.hpp"
#include "sfc/tree.hpp"

namespace sfc {

/// Uniform spanning tree by loop-erased random walks toward `root`
/// (Wilson's construction). Throws Disconnected.
Tree wilson_sample(const Graph& g, std::uint64_t seed, Vertex root = 0);

/// Empirical or exact distribution of spanning-tree isomorphism classes.
/// Frequencies are count / total; the exact variant uses labelled
/// multiplicities over the labelled spanning-tree count.
struct ClassDistribution {
  int n = 0;
  BigInt total;
  std::map<CanonCode, BigInt> counts;
  double max_class_prob = 0.0;
  BigInt max_class_count;
  std::optional<double> epsilon;
  std::optional<double> threshold;  // e^{-(1 - epsilon) n}
  std::optional<std::uint64_t> seed;
  std::string generator_id;  // empty for exact distributions
  bool exact = false;

  double frequency(const CanonCode& code) const;
  /// count / total as a decimal string truncated to `digits` places.
  std::string frequency_decimal(const CanonCode& code, unsigned digits = 12) const;
};

/// Sample i is drawn from Rng::stream(seed, i), so the report is the same
/// for every thread count. Throws Disconnected or BadParameters.
ClassDistribution class_distribution(const Graph& g, std::uint64_t samples, std::uint64_t seed, double epsilon,
                                     int threads = 1, Vertex root = 0);

/// Exact class masses from the census. Throws OverCap.
ClassDistribution exact_class_distribution(const Graph& g, std::uint64_t cap);

}  // namespace sfc

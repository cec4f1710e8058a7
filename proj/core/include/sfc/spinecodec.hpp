#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sfc/bigint.hpp"
#include "sfc/enumeration.hpp"
#include "sfc/tree.hpp"

namespace sfc {

/// Block layout for a spine tree on n vertices built from L rooted blocks of
/// K vertices. Pendant path lengths a and b count edges.
struct SpineParams {
  int K = 0;
  int n = 0;
  int L = 0;
  int R = 0;
  int a = 0;
  int b = 0;

  bool operator==(const SpineParams&) const = default;
};

/// Throws TooSmall if n < 8K (fewer than two blocks), BadParameters if K < 2.
SpineParams compute_params(int n, int K);

/// Smallest n accepted by compute_params for this K.
inline int min_spine_n(int K) { return 8 * K; }

struct TreeTuple {
  std::vector<RootedTree> blocks;
};

/// Places the blocks, links their roots x_1..x_L into a spine, and hangs a
/// path of a edges on x_1 and of b edges on x_L. Vertex numbering: blocks in
/// tuple order (each in canonical level-sequence preorder), then the a-path,
/// then the b-path. Throws ShapeMismatch.
Tree encode(const SpineParams& params, const TreeTuple& tuple);

/// Reason codes attached to NotInImage errors.
namespace decode_reason {
inline constexpr const char* WrongLongPathCount = "WrongLongPathCount";
inline constexpr const char* EqualLengths = "EqualLengths";
inline constexpr const char* BadBlockSize = "BadBlockSize";
inline constexpr const char* BadParams = "BadParams";
}  // namespace decode_reason

/// A leaf-to-branch path: deg(leaf) = 1, interior degree 2, deg(attachment) >= 3.
struct PendantPath {
  Vertex leaf = -1;
  Vertex attachment = -1;
  int length = 0;
};

/// All maximal pendant paths; empty when the tree is itself a path.
std::vector<PendantPath> pendant_paths(const Tree& t);

/// Recovers the block tuple from a tree in the image of encode. Blocks are
/// relabeled 0..K-1 with the root at 0, in spine order from x_1. Throws
/// NotInImage with a decode_reason code.
TreeTuple decode(const Tree& t, int K);

/// Exact comparison a_K^L q^n >= p^n for p/q = alpha_ref - epsilon.
struct FamilyCertificate {
  Rational epsilon;
  Rational bound;  // alpha_ref - epsilon
  int K = 0;
  int Delta = 0;
  Rational rho;
  int n = 0;
  SpineParams params;
  BigInt aK;
  bool verdict = false;
  // Transcript of the comparison lhs = a_K^L q^n against rhs = p^n.
  std::size_t lhs_bits = 0;
  std::size_t rhs_bits = 0;
  int comparison = 0;  // sign of lhs - rhs
};

/// Throws BadParameters unless 0 < epsilon < alpha_ref; TooSmall if
/// n < 8K for K = choose_K(epsilon).
FamilyCertificate certify(const Rational& epsilon, int n);

/// Same, with K supplied by the caller (a_K from `counter`).
FamilyCertificate certify_with_K(const Rational& epsilon, int n, int K, RootedCounter& counter);

/// Exact verdict for every n in [n_lo, n_hi], run incrementally; each step
/// multiplies by small factors instead of re-powering.
struct CertificateSweep {
  Rational epsilon;
  int K = 0;
  int n_lo = 0;
  int n_hi = 0;
  std::vector<bool> verdicts;  // verdicts[i] is for n = n_lo + i
  /// Smallest n0 with verdict true on all of [n0, n_hi]; nullopt if the
  /// verdict at n_hi is false.
  std::optional<int> threshold;
};

/// n_lo defaults to 8K when passed 0.
CertificateSweep certify_sweep(const Rational& epsilon, int n_lo, int n_hi);

}  // namespace sfc

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sfc/tree.hpp"

namespace sfc {

inline constexpr int kDefaultRootedGenCap = 20;
inline constexpr int kDefaultFreeGenCap = 16;

/// Preorder depth sequence of a rooted tree, root at depth 1, children taken
/// in the order that makes the sequence lexicographically maximal.
class LevelSequence {
 public:
  /// Validates shape and canonicity; throws NotCanonical.
  explicit LevelSequence(std::vector<int> depths);

  const std::vector<int>& depths() const noexcept { return s_; }
  int size() const noexcept { return static_cast<int>(s_.size()); }

  auto operator<=>(const LevelSequence&) const = default;
  bool operator==(const LevelSequence&) const = default;

 private:
  struct Trusted {};
  LevelSequence(std::vector<int> depths, Trusted) : s_(std::move(depths)) {}

  friend LevelSequence first_sequence(int k);
  friend bool advance(LevelSequence& seq);
  friend LevelSequence canonical_level_sequence(const RootedTree& rt);

  std::vector<int> s_;
};

/// The path [1, 2, ..., k].
LevelSequence first_sequence(int k);

/// Next canonical sequence in decreasing lexicographic order; nullopt after
/// the star [1, 2, ..., 2].
std::optional<LevelSequence> successor(const LevelSequence& seq);

/// In-place form of successor(); returns false at the end.
bool advance(LevelSequence& seq);

/// Vertex i is the i-th vertex in preorder, root 0.
RootedTree to_tree(const LevelSequence& seq);

LevelSequence canonical_level_sequence(const RootedTree& rt);

/// Pull-style stream over every rooted tree on k vertices, one per
/// isomorphism class, in decreasing sequence order.
class RootedTreeStream {
 public:
  explicit RootedTreeStream(int k, int cap = kDefaultRootedGenCap);

  /// Moves to the next tree; the first call positions on the path.
  bool next();
  const LevelSequence& sequence() const { return *current_; }
  RootedTree tree() const { return to_tree(*current_); }

 private:
  int k_;
  bool started_ = false;
  std::optional<LevelSequence> current_;
};

/// Visits every rooted tree on k vertices. Throws ResourceLimit if k > cap.
void for_each_rooted(int k, const std::function<void(const LevelSequence&)>& visit, int cap = kDefaultRootedGenCap);

std::size_t count_rooted(int k, int cap = kDefaultRootedGenCap);

/// Visits one representative per free isomorphism class, filtered from the
/// rooted stream by first occurrence of its free canonical code.
void for_each_free(int k, const std::function<void(const Tree&)>& visit, int cap = kDefaultFreeGenCap);

}  // namespace sfc

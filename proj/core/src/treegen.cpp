#include "sfc/treegen.hpp"

#include <algorithm>
#include <unordered_set>

#include "sfc/error.hpp"

namespace sfc {
namespace {

void check_k(int k, int cap) {
  if (k < 1) throw Error(ErrorKind::BadParameters, "k must be positive");
  if (k > cap) {
    throw Error(ErrorKind::ResourceLimit, "k=" + std::to_string(k) + " exceeds the generation cap " + std::to_string(cap));
  }
}

// Level sequence of the subtree at v (depths relative to `base`), children
// concatenated in non-increasing order of their own sequences.
std::vector<int> subtree_sequence(const Tree& t, Vertex v, Vertex parent, int depth) {
  std::vector<std::vector<int>> kids;
  for (Vertex w : t.neighbors(v)) {
    if (w != parent) kids.push_back(subtree_sequence(t, w, v, depth + 1));
  }
  std::sort(kids.begin(), kids.end(), std::greater<>());
  std::vector<int> out{depth};
  for (auto& k : kids) out.insert(out.end(), k.begin(), k.end());
  return out;
}

}  // namespace

LevelSequence::LevelSequence(std::vector<int> depths) : s_(std::move(depths)) {
  if (s_.empty() || s_[0] != 1) throw Error(ErrorKind::NotCanonical, "level sequence must start with the root at depth 1");
  for (std::size_t i = 1; i < s_.size(); ++i) {
    if (s_[i] < 2 || s_[i] > s_[i - 1] + 1) {
      throw Error(ErrorKind::NotCanonical, "invalid depth step at position " + std::to_string(i));
    }
  }
  if (canonical_level_sequence(to_tree(*this)).s_ != s_) {
    throw Error(ErrorKind::NotCanonical, "sequence is not lexicographically maximal for its tree");
  }
}

LevelSequence first_sequence(int k) {
  if (k < 1) throw Error(ErrorKind::BadParameters, "k must be positive");
  std::vector<int> s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[i] = i + 1;
  return LevelSequence(std::move(s), LevelSequence::Trusted{});
}

bool advance(LevelSequence& seq) {
  // Beyer-Hedetniemi: p is the last position deeper than 2, q the previous
  // position one level up from p; copy the block s[q..p-1] cyclically from p.
  auto& s = seq.s_;
  const int k = static_cast<int>(s.size());
  int p = k - 1;
  while (p > 0 && s[p] <= 2) --p;
  if (p == 0) return false;
  int q = p - 1;
  while (s[q] != s[p] - 1) --q;
  const int period = p - q;
  for (int i = p; i < k; ++i) s[i] = s[i - period];
  return true;
}

std::optional<LevelSequence> successor(const LevelSequence& seq) {
  LevelSequence next = seq;
  if (!advance(next)) return std::nullopt;
  return next;
}

RootedTree to_tree(const LevelSequence& seq) {
  const auto& s = seq.depths();
  const int k = seq.size();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(k - 1));
  std::vector<Vertex> last_at_depth(static_cast<std::size_t>(k + 2), -1);
  last_at_depth[1] = 0;
  for (int i = 1; i < k; ++i) {
    edges.emplace_back(last_at_depth[s[i] - 1], i);
    last_at_depth[s[i]] = i;
  }
  return RootedTree(Tree::from_edges(k, edges), 0);
}

LevelSequence canonical_level_sequence(const RootedTree& rt) {
  return LevelSequence(subtree_sequence(rt.tree, rt.root, -1, 1), LevelSequence::Trusted{});
}

RootedTreeStream::RootedTreeStream(int k, int cap) : k_(k) { check_k(k, cap); }

bool RootedTreeStream::next() {
  if (!started_) {
    started_ = true;
    current_ = first_sequence(k_);
    return true;
  }
  if (!current_) return false;
  if (!advance(*current_)) {
    current_.reset();
    return false;
  }
  return true;
}

void for_each_rooted(int k, const std::function<void(const LevelSequence&)>& visit, int cap) {
  check_k(k, cap);
  LevelSequence seq = first_sequence(k);
  do {
    visit(seq);
  } while (advance(seq));
}

std::size_t count_rooted(int k, int cap) {
  std::size_t count = 0;
  for_each_rooted(k, [&](const LevelSequence&) { ++count; }, cap);
  return count;
}

void for_each_free(int k, const std::function<void(const Tree&)>& visit, int cap) {
  check_k(k, cap);
  std::unordered_set<CanonCode> seen;
  for_each_rooted(
      k,
      [&](const LevelSequence& seq) {
        RootedTree rt = to_tree(seq);
        if (seen.insert(canon_free(rt.tree)).second) visit(rt.tree);
      },
      k);
}

}  // namespace sfc

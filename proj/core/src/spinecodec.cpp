#include "sfc/spinecodec.hpp"

#include <algorithm>

#include "sfc/error.hpp"
#include "sfc/treegen.hpp"

namespace sfc {

SpineParams compute_params(int n, int K) {
  if (K < 2) throw Error(ErrorKind::BadParameters, "block size K must be >= 2, got " + std::to_string(K));
  if (n < min_spine_n(K)) {
    throw Error(ErrorKind::TooSmall, "n=" + std::to_string(n) + " gives fewer than two blocks for K=" +
                                         std::to_string(K) + "; minimum admissible n is " +
                                         std::to_string(min_spine_n(K)));
  }
  SpineParams p;
  p.K = K;
  p.n = n;
  p.L = n / K - 6;
  p.R = n - p.L * K;
  p.a = 2 * K + 1;
  p.b = p.R - p.a;
  return p;
}

Tree encode(const SpineParams& params, const TreeTuple& tuple) {
  const int K = params.K;
  const int L = params.L;
  if (static_cast<int>(tuple.blocks.size()) != L) {
    throw Error(ErrorKind::ShapeMismatch,
                "tuple has " + std::to_string(tuple.blocks.size()) + " blocks, params need L=" + std::to_string(L));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(params.n - 1));
  for (int i = 0; i < L; ++i) {
    const RootedTree& block = tuple.blocks[i];
    if (block.tree.size() != K) {
      throw Error(ErrorKind::ShapeMismatch, "block " + std::to_string(i) + " has " +
                                                std::to_string(block.tree.size()) + " vertices, expected K=" +
                                                std::to_string(K));
    }
    const int offset = i * K;
    const RootedTree layout = to_tree(canonical_level_sequence(block));
    for (auto [u, v] : layout.tree.edges()) edges.emplace_back(offset + u, offset + v);
    if (i > 0) edges.emplace_back(offset - K, offset);
  }
  Vertex next = L * K;
  auto hang_path = [&](Vertex attach, int length) {
    Vertex prev = attach;
    for (int j = 0; j < length; ++j) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  };
  hang_path(0, params.a);
  hang_path((L - 1) * K, params.b);
  return Tree::from_edges(params.n, edges);
}

std::vector<PendantPath> pendant_paths(const Tree& t) {
  std::vector<PendantPath> out;
  if (t.size() < 3) return out;
  for (Vertex leaf = 0; leaf < t.size(); ++leaf) {
    if (t.degree(leaf) != 1) continue;
    Vertex prev = leaf;
    Vertex cur = t.neighbors(leaf)[0];
    int length = 1;
    while (t.degree(cur) == 2) {
      const auto& nb = t.neighbors(cur);
      Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = nxt;
      ++length;
    }
    if (t.degree(cur) == 1) return {};  // the whole tree is a path
    out.push_back({leaf, cur, length});
  }
  return out;
}

namespace {

[[noreturn]] void not_in_image(const char* reason, const std::string& detail) {
  throw Error(ErrorKind::NotInImage, detail, reason);
}

}  // namespace

TreeTuple decode(const Tree& t, int K) {
  using namespace decode_reason;
  if (K < 2) not_in_image(BadParams, "block size K must be >= 2");
  const int n = t.size();
  if (n < min_spine_n(K)) not_in_image(BadParams, "n=" + std::to_string(n) + " is below 8K for K=" + std::to_string(K));
  const SpineParams params = compute_params(n, K);

  std::vector<PendantPath> longs;
  for (const auto& p : pendant_paths(t)) {
    if (p.length > K) longs.push_back(p);
  }
  if (longs.size() != 2) {
    not_in_image(WrongLongPathCount,
                 "found " + std::to_string(longs.size()) + " maximal pendant paths longer than K, expected 2");
  }
  if (longs[0].length == longs[1].length) not_in_image(EqualLengths, "both long pendant paths have the same length");
  if (longs[0].length > longs[1].length) std::swap(longs[0], longs[1]);
  const PendantPath& short_path = longs[0];
  const PendantPath& long_path = longs[1];
  if (short_path.length != params.a || long_path.length != params.b) {
    not_in_image(BadParams, "pendant path lengths (" + std::to_string(short_path.length) + ", " +
                                std::to_string(long_path.length) + ") differ from (a, b) = (" +
                                std::to_string(params.a) + ", " + std::to_string(params.b) + ")");
  }
  const Vertex x1 = short_path.attachment;
  const Vertex xL = long_path.attachment;
  if (x1 == xL) not_in_image(BadBlockSize, "both long pendant paths attach at the same vertex");

  // Mark the pendant path vertices (excluding attachments) as removed.
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (const PendantPath* path : {&short_path, &long_path}) {
    Vertex prev = -1;
    Vertex cur = path->leaf;
    while (cur != path->attachment) {
      removed[cur] = 1;
      Vertex nxt = -1;
      for (Vertex w : t.neighbors(cur)) {
        if (w != prev) nxt = w;
      }
      prev = cur;
      cur = nxt;
    }
  }

  // Spine: the unique x1 -> xL path.
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue{xL};
  parent[xL] = xL;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Vertex w : t.neighbors(queue[i])) {
      if (parent[w] == -1) {
        parent[w] = queue[i];
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> spine;
  for (Vertex v = x1;; v = parent[v]) {
    spine.push_back(v);
    if (v == xL) break;
  }
  std::vector<char> on_spine(static_cast<std::size_t>(n), 0);
  for (Vertex v : spine) on_spine[v] = 1;

  TreeTuple tuple;
  tuple.blocks.reserve(spine.size());
  std::vector<int> local(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < spine.size(); ++i) {
    const Vertex root = spine[i];
    std::vector<Vertex> members{root};
    local[root] = 0;
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < members.size(); ++j) {
      const Vertex v = members[j];
      for (Vertex w : t.neighbors(v)) {
        if (removed[w] || on_spine[w] || local[w] != -1) continue;
        local[w] = static_cast<int>(members.size());
        members.push_back(w);
        edges.emplace_back(local[v], local[w]);
      }
    }
    if (static_cast<int>(members.size()) != K) {
      not_in_image(BadBlockSize, "block at spine position " + std::to_string(i + 1) + " has " +
                                     std::to_string(members.size()) + " vertices, expected K=" + std::to_string(K));
    }
    tuple.blocks.emplace_back(Tree::from_edges(K, edges), 0);
  }
  if (static_cast<int>(tuple.blocks.size()) != params.L) {
    not_in_image(BadParams, "spine has " + std::to_string(tuple.blocks.size()) + " vertices, expected L=" +
                                std::to_string(params.L));
  }
  return tuple;
}

namespace {

Rational certificate_bound(const Rational& epsilon) {
  const Rational alpha = OtterConstants::alpha_ref();
  if (epsilon <= 0 || epsilon >= alpha) {
    throw Error(ErrorKind::BadParameters, "epsilon must satisfy 0 < epsilon < " + to_string(alpha));
  }
  Rational bound = alpha - epsilon;
  bound.canonicalize();
  return bound;
}

}  // namespace

FamilyCertificate certify_with_K(const Rational& epsilon, int n, int K, RootedCounter& counter) {
  FamilyCertificate cert;
  cert.epsilon = epsilon;
  cert.bound = certificate_bound(epsilon);
  cert.K = K;
  cert.Delta = K + 1;
  cert.rho = Rational(1, 3 * K);
  cert.n = n;
  if (n < min_spine_n(K)) {
    throw Error(ErrorKind::TooSmall, "no certificate for n=" + std::to_string(n) + " with K=" + std::to_string(K) +
                                         "; minimal provable n is " + std::to_string(min_spine_n(K)));
  }
  cert.params = compute_params(n, K);
  counter.extend_to(static_cast<std::size_t>(K));
  cert.aK = counter(static_cast<std::size_t>(K));

  const BigInt lhs = pow(cert.aK, static_cast<unsigned long>(cert.params.L)) *
                     pow(cert.bound.get_den(), static_cast<unsigned long>(n));
  const BigInt rhs = pow(cert.bound.get_num(), static_cast<unsigned long>(n));
  cert.lhs_bits = mpz_sizeinbase(lhs.get_mpz_t(), 2);
  cert.rhs_bits = mpz_sizeinbase(rhs.get_mpz_t(), 2);
  cert.comparison = cmp(lhs, rhs) < 0 ? -1 : (cmp(lhs, rhs) > 0 ? 1 : 0);
  cert.verdict = cert.comparison >= 0;
  return cert;
}

FamilyCertificate certify(const Rational& epsilon, int n) {
  certificate_bound(epsilon);
  RootedCounter counter;
  const int K = choose_K(epsilon, counter);
  return certify_with_K(epsilon, n, K, counter);
}

CertificateSweep certify_sweep(const Rational& epsilon, int n_lo, int n_hi) {
  const Rational bound = certificate_bound(epsilon);
  RootedCounter counter;
  const int K = choose_K(epsilon, counter);
  if (n_lo == 0) n_lo = min_spine_n(K);
  if (n_lo < min_spine_n(K)) {
    throw Error(ErrorKind::TooSmall, "sweep start n=" + std::to_string(n_lo) + " is below the minimal provable n " +
                                         std::to_string(min_spine_n(K)));
  }
  if (n_hi < n_lo) throw Error(ErrorKind::BadParameters, "empty sweep range");

  CertificateSweep sweep;
  sweep.epsilon = epsilon;
  sweep.K = K;
  sweep.n_lo = n_lo;
  sweep.n_hi = n_hi;
  sweep.verdicts.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));

  const BigInt& aK = counter(static_cast<std::size_t>(K));
  const BigInt& p = bound.get_num();
  const BigInt& q = bound.get_den();
  const bool small_factors = p.fits_ulong_p() && q.fits_ulong_p();

  int L = n_lo / K - 6;
  BigInt lhs = pow(aK, static_cast<unsigned long>(L)) * pow(q, static_cast<unsigned long>(n_lo));
  BigInt rhs = pow(p, static_cast<unsigned long>(n_lo));
  for (int n = n_lo;; ++n) {
    sweep.verdicts.push_back(cmp(lhs, rhs) >= 0);
    if (n == n_hi) break;
    if (small_factors) {
      mpz_mul_ui(lhs.get_mpz_t(), lhs.get_mpz_t(), q.get_ui());
      mpz_mul_ui(rhs.get_mpz_t(), rhs.get_mpz_t(), p.get_ui());
    } else {
      lhs *= q;
      rhs *= p;
    }
    if ((n + 1) / K - 6 != L) {
      ++L;
      lhs *= aK;
    }
  }

  if (sweep.verdicts.back()) {
    int i = static_cast<int>(sweep.verdicts.size()) - 1;
    while (i > 0 && sweep.verdicts[static_cast<std::size_t>(i - 1)]) --i;
    sweep.threshold = n_lo + i;
  }
  return sweep;
}

}  // namespace sfc

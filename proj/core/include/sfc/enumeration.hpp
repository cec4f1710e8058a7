#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sfc/bigint.hpp"

namespace sfc {

inline constexpr std::size_t kDefaultCountCap = 100000;
inline constexpr int kDefaultChooseKCap = 5000;

/// Reference values for Otter's constants. alpha_ref doubles as the upper
/// bound on alpha used by choose_K and certificates.
struct OtterConstants {
  static Rational alpha_ref() { return make_rational(2956, 1000); }
  static Rational C_ref() { return make_rational(535, 1000); }
  static Rational Cprime_ref() { return make_rational(44, 100); }
};

/// a(n) counts unlabelled rooted trees, t(n) unlabelled free trees. Both are
/// 1-indexed; t is empty unless filled by free_counts.
struct CountTable {
  std::size_t N = 0;
  std::vector<BigInt> a;
  std::vector<BigInt> t;

  const BigInt& rooted(std::size_t n) const { return a.at(n - 1); }
  const BigInt& free(std::size_t n) const { return t.at(n - 1); }
  bool has_free() const noexcept { return !t.empty(); }
};

/// Incremental form of the rooted-tree recurrence
///   n a_{n+1} = sum_{k=1..n} c_k a_{n-k+1},   c_k = sum_{d|k} d a_d,
/// with c maintained by pushing d a_d onto every multiple of d.
class RootedCounter {
 public:
  explicit RootedCounter(std::size_t cap = kDefaultCountCap) : cap_(cap) {}

  /// Ensures a_1..a_N are available. Throws ResourceLimit if N > cap.
  void extend_to(std::size_t N);

  std::size_t size() const noexcept { return a_.size(); }
  const BigInt& operator()(std::size_t n) const { return a_.at(n - 1); }
  const std::vector<BigInt>& values() const noexcept { return a_; }

 private:
  std::size_t cap_;
  std::vector<BigInt> a_;  // a_[i] = a_{i+1}
  std::vector<BigInt> c_;  // c_[i] = partial c_{i+1}
};

CountTable rooted_counts(std::size_t N, std::size_t cap = kDefaultCountCap);

/// Adds t_n = a_n - (sum_{i=1}^{n-1} a_i a_{n-i} - [n even] a_{n/2}) / 2.
/// Throws InternalParityViolation if the halved quantity is odd.
CountTable free_counts(std::size_t N, std::size_t cap = kDefaultCountCap);

enum class AlphaMethod { Root, Ratio };

/// a_k^{1/k} or a_k / a_{k-1}, truncated to `digits` significant digits
/// with integer arithmetic only.
Decimal alpha_estimate(const CountTable& table, std::size_t k, AlphaMethod method, unsigned digits = 12);
Decimal alpha_estimate(std::size_t k, AlphaMethod method, unsigned digits = 12);

/// Exact test a_K q^K > p^K for the rational bound p/q.
bool exceeds_power(const BigInt& aK, const Rational& bound, unsigned long K);

/// Smallest K >= 2 with a_K q^K > p^K, where p/q = alpha_ref - epsilon/3.
/// Throws BadParameters unless 0 < epsilon < alpha_ref, SearchExhausted if
/// no K <= cap works.
int choose_K(const Rational& epsilon, int cap = kDefaultChooseKCap);

/// Same, reusing (and extending) a caller-owned counter.
int choose_K(const Rational& epsilon, RootedCounter& counter, int cap = kDefaultChooseKCap);

}  // namespace sfc

#include "sfc/enumeration.hpp"

#include "sfc/error.hpp"

namespace sfc {

void RootedCounter::extend_to(std::size_t N) {
  if (N > cap_) {
    throw Error(ErrorKind::ResourceLimit,
                "N=" + std::to_string(N) + " exceeds the count cap " + std::to_string(cap_));
  }
  const std::size_t known = a_.size();
  if (N <= known) return;

  // c_m only needs contributions from divisors d < m, so c_1..c_{known}
  // are already complete; push known terms onto the newly covered indices.
  const std::size_t old_cap = c_.size();
  c_.resize(N);
  for (std::size_t d = 1; d <= known; ++d) {
    const BigInt weighted = BigInt(static_cast<unsigned long>(d)) * a_[d - 1];
    std::size_t m = ((old_cap / d) + 1) * d;
    for (; m <= N; m += d) c_[m - 1] += weighted;
  }

  a_.reserve(N);
  BigInt acc;
  for (std::size_t next = known + 1; next <= N; ++next) {
    if (next == 1) {
      a_.emplace_back(1);
    } else {
      const std::size_t n = next - 1;
      acc = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        mpz_addmul(acc.get_mpz_t(), c_[k - 1].get_mpz_t(), a_[n - k].get_mpz_t());
      }
      BigInt q;
      mpz_divexact_ui(q.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
      a_.push_back(std::move(q));
    }
    const BigInt weighted = BigInt(static_cast<unsigned long>(next)) * a_.back();
    for (std::size_t m = next; m <= N; m += next) c_[m - 1] += weighted;
  }
}

CountTable rooted_counts(std::size_t N, std::size_t cap) {
  if (N < 1) throw Error(ErrorKind::BadParameters, "N must be positive");
  RootedCounter counter(cap);
  counter.extend_to(N);
  CountTable table;
  table.N = N;
  table.a = counter.values();
  return table;
}

CountTable free_counts(std::size_t N, std::size_t cap) {
  CountTable table = rooted_counts(N, cap);
  table.t.reserve(N);
  BigInt pairs;
  for (std::size_t n = 1; n <= N; ++n) {
    pairs = 0;
    for (std::size_t i = 1; i < n; ++i) {
      mpz_addmul(pairs.get_mpz_t(), table.a[i - 1].get_mpz_t(), table.a[n - i - 1].get_mpz_t());
    }
    if (n % 2 == 0) pairs -= table.a[n / 2 - 1];
    if (mpz_odd_p(pairs.get_mpz_t())) {
      throw Error(ErrorKind::InternalParityViolation, "odd pair sum at n=" + std::to_string(n));
    }
    BigInt half;
    mpz_divexact_ui(half.get_mpz_t(), pairs.get_mpz_t(), 2);
    table.t.push_back(table.a[n - 1] - half);
  }
  return table;
}

namespace {

Decimal estimate(const BigInt& ak, const BigInt& aprev, std::size_t k, AlphaMethod method, unsigned scale) {
  if (method == AlphaMethod::Ratio) return divide_to_decimal(ak, aprev, scale);
  // floor((a_k 10^{scale k})^{1/k}) = floor(a_k^{1/k} 10^scale)
  BigInt scaled = ak * pow(BigInt(10), static_cast<unsigned long>(scale) * k);
  Decimal d;
  d.scale = scale;
  mpz_root(d.scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(k));
  return d;
}

}  // namespace

Decimal alpha_estimate(const CountTable& table, std::size_t k, AlphaMethod method, unsigned digits) {
  if (k < 2) throw Error(ErrorKind::BadParameters, "alpha estimate needs k >= 2");
  if (k > table.a.size()) throw Error(ErrorKind::BadParameters, "count table does not reach k=" + std::to_string(k));
  if (digits == 0) throw Error(ErrorKind::BadParameters, "digits must be positive");
  const BigInt& ak = table.rooted(k);
  const BigInt& aprev = table.rooted(k - 1);
  // Both estimates are >= 1; size the fractional part from the integer part.
  Decimal whole = estimate(ak, aprev, k, method, 0);
  const unsigned int_digits = static_cast<unsigned>(decimal_digits(whole.scaled));
  const unsigned scale = digits > int_digits ? digits - int_digits : 0;
  return estimate(ak, aprev, k, method, scale);
}

Decimal alpha_estimate(std::size_t k, AlphaMethod method, unsigned digits) {
  return alpha_estimate(rooted_counts(std::max<std::size_t>(k, 1)), k, method, digits);
}

bool exceeds_power(const BigInt& aK, const Rational& bound, unsigned long K) {
  return aK * pow(bound.get_den(), K) > pow(bound.get_num(), K);
}

int choose_K(const Rational& epsilon, int cap) {
  RootedCounter counter(static_cast<std::size_t>(std::max(cap, 2)));
  return choose_K(epsilon, counter, cap);
}

int choose_K(const Rational& epsilon, RootedCounter& counter, int cap) {
  const Rational alpha = OtterConstants::alpha_ref();
  if (epsilon <= 0 || epsilon >= alpha) {
    throw Error(ErrorKind::BadParameters, "epsilon must satisfy 0 < epsilon < " + to_string(alpha));
  }
  Rational bound = alpha - epsilon / 3;
  bound.canonicalize();
  const BigInt& p = bound.get_num();
  const BigInt& q = bound.get_den();

  BigInt p_pow = p * p;
  BigInt q_pow = q * q;
  std::size_t chunk = 64;
  for (int K = 2; K <= cap; ++K) {
    if (counter.size() < static_cast<std::size_t>(K)) {
      counter.extend_to(std::min<std::size_t>(static_cast<std::size_t>(cap), static_cast<std::size_t>(K) + chunk));
      chunk *= 2;
    }
    if (counter(static_cast<std::size_t>(K)) * q_pow > p_pow) return K;
    p_pow *= p;
    q_pow *= q;
  }
  throw Error(ErrorKind::SearchExhausted, "no K <= " + std::to_string(cap) + " satisfies a_K > (" + to_string(bound) +
                                               ")^K for epsilon=" + to_string(epsilon));
}

}  // namespace sfc

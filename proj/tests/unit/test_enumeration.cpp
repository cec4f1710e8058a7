#include <gtest/gtest.h>

#include <cmath>

#include <set>

#include "oracles.hpp"
#include "sfc/enumeration.hpp"
#include "sfc/error.hpp"
#include "sfc/treegen.hpp"

namespace sfc {
namespace {

// Smallest K with ln a_K > K ln(bound) found by a 50-digit floating scan.
int float_scan_K(const Rational& bound, const CountTable& table) {
  for (std::size_t K = 2; K <= table.N; ++K) {
    if (oracle::log_exceeds50(table.rooted(K), bound, static_cast<long>(K)) > 0) return static_cast<int>(K);
  }
  return -1;
}

bool exact_test(const CountTable& table, const Rational& bound, int K) {
  return exceeds_power(table.rooted(static_cast<std::size_t>(K)), bound, static_cast<unsigned long>(K));
}

TEST(RootedCounts, BaseCases) {
  CountTable t = rooted_counts(2);
  ASSERT_EQ(t.a.size(), 2u);
  EXPECT_EQ(t.rooted(1), 1);
  EXPECT_EQ(t.rooted(2), 1);
  EXPECT_FALSE(t.has_free());
}

TEST(RootedCounts, MatchGeneratorAtFourAndTen) {
  CountTable t = rooted_counts(10);
  EXPECT_EQ(t.rooted(4), BigInt(static_cast<unsigned long>(count_rooted(4))));
  EXPECT_EQ(t.rooted(10), BigInt(static_cast<unsigned long>(count_rooted(10))));
}

TEST(RootedCounts, IncrementalExtensionMatchesOneShot) {
  RootedCounter c;
  c.extend_to(7);
  c.extend_to(13);
  c.extend_to(40);
  CountTable t = rooted_counts(40);
  EXPECT_EQ(c.values(), t.a);
}

TEST(RootedCounts, CapIsResourceLimit) {
  try {
    rooted_counts(50, 40);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceLimit);
  }
}

TEST(FreeCounts, AgainstPrueferDedup) {
  CountTable t = free_counts(9);
  EXPECT_EQ(t.free(1), 1);
  for (int n : {4, 9}) {
    std::set<CanonCode> codes;
    oracle::for_each_labelled_tree(n, [&](const Tree& tr) { codes.insert(canon_free(tr)); });
    EXPECT_EQ(t.free(n), BigInt(static_cast<unsigned long>(codes.size()))) << n;
  }
}

TEST(FreeCounts, LiteratureValues) {
  // Published initial terms of both sequences, checked here after the
  // oracle tests above establish the recurrence on small n.
  CountTable t = free_counts(16);
  EXPECT_EQ(t.rooted(16), 235381);
  EXPECT_EQ(t.free(14), 3159);
  EXPECT_EQ(t.free(16), 19320);
}

TEST(CountInvariants, MonotoneAndBounded) {
  CountTable t = free_counts(300);
  for (std::size_t n = 1; n < 300; ++n) {
    ASSERT_LE(t.rooted(n), t.rooted(n + 1));
    ASSERT_LE(t.free(n), t.free(n + 1));
  }
  for (std::size_t n = 1; n <= 300; ++n) ASSERT_LE(t.free(n), t.rooted(n));
}

TEST(AlphaEstimate, TrivialAtTwo) {
  CountTable t = rooted_counts(2);
  Decimal d = alpha_estimate(t, 2, AlphaMethod::Root);
  EXPECT_EQ(d.scaled, pow(BigInt(10), d.scale));
  EXPECT_EQ(d.str(), "1.00000000000");
}

TEST(AlphaEstimate, HasRequestedSignificantDigits) {
  CountTable t = rooted_counts(60);
  Decimal d = alpha_estimate(t, 60, AlphaMethod::Ratio, 15);
  EXPECT_EQ(decimal_digits(d.scaled), 15u);
  // Ratio a_60/a_59 from the exact integers, independently via ln.
  const double ln_ratio = std::stod(oracle::ln50(t.rooted(60))) - std::stod(oracle::ln50(t.rooted(59)));
  EXPECT_NEAR(d.to_double(), std::exp(ln_ratio), 1e-12);
}

TEST(AlphaEstimate, RootBelowRatioAndNearOtter) {
  CountTable t = rooted_counts(2000);
  const double ratio = alpha_estimate(t, 2000, AlphaMethod::Ratio).to_double();
  const double root = alpha_estimate(t, 2000, AlphaMethod::Root).to_double();
  EXPECT_NEAR(ratio, 2.956, 0.01);
  EXPECT_LT(root, ratio);
  for (std::size_t k = 100; k <= 2000; k += 19) {
    ASSERT_LT(alpha_estimate(t, k, AlphaMethod::Root, 15).scaled, alpha_estimate(t, k, AlphaMethod::Ratio, 15).scaled);
  }
}

TEST(AlphaEstimate, RootMatchesFiftyDigitLog) {
  CountTable t = rooted_counts(500);
  for (std::size_t k : {50u, 200u, 500u}) {
    const double expected = std::exp(std::stod(oracle::ln50(t.rooted(k))) / static_cast<double>(k));
    EXPECT_NEAR(alpha_estimate(t, k, AlphaMethod::Root).to_double(), expected, 1e-11) << k;
  }
}

TEST(ChooseK, EpsilonTwo) {
  const Rational eps(2);
  const Rational bound = OtterConstants::alpha_ref() - eps / 3;
  const CountTable t = rooted_counts(200);
  const int K = choose_K(eps);
  EXPECT_EQ(K, float_scan_K(bound, t));
  EXPECT_TRUE(exact_test(t, bound, K));
  EXPECT_FALSE(exact_test(t, bound, K - 1));
}

TEST(ChooseK, NearTotalSlack) {
  // alpha_ref - eps/3 is about 1.971 here, still above 1, so K is not 2.
  const Rational eps = OtterConstants::alpha_ref() - Rational(1, 1000);
  const Rational bound = OtterConstants::alpha_ref() - eps / 3;
  EXPECT_GT(bound, 1);
  const CountTable t = rooted_counts(200);
  const int K = choose_K(eps);
  EXPECT_EQ(K, float_scan_K(bound, t));
  EXPECT_EQ(K, 11);
}

TEST(ChooseK, MinimalityForHalf) {
  const Rational eps(1, 2);
  const Rational bound = OtterConstants::alpha_ref() - eps / 3;
  const CountTable t = rooted_counts(400);
  const int K = choose_K(eps);
  EXPECT_TRUE(exact_test(t, bound, K));
  EXPECT_FALSE(exact_test(t, bound, K - 1));
  for (int k = 2; k < K; ++k) ASSERT_FALSE(exact_test(t, bound, k));
  EXPECT_EQ(K, float_scan_K(bound, t));
}

TEST(ChooseK, RejectsOutOfRangeEpsilon) {
  EXPECT_THROW(choose_K(Rational(0)), Error);
  EXPECT_THROW(choose_K(OtterConstants::alpha_ref()), Error);
  EXPECT_THROW(choose_K(Rational(-1, 2)), Error);
}

TEST(ChooseK, SearchExhausted) {
  try {
    choose_K(Rational(1, 100), 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SearchExhausted);
  }
}

TEST(Rational, Parsing) {
  EXPECT_EQ(parse_rational("1/2"), Rational(1, 2));
  EXPECT_EQ(parse_rational("0.5"), Rational(1, 2));
  EXPECT_EQ(parse_rational("2"), Rational(2));
  EXPECT_EQ(parse_rational("4/8"), Rational(1, 2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(CeilExp, SmallArguments) {
  EXPECT_EQ(ceil_exp(Rational(0)), 1);
  EXPECT_EQ(ceil_exp(Rational(1, 2000)), 2);
  EXPECT_EQ(ceil_exp(Rational(1)), 3);
  EXPECT_EQ(ceil_exp(Rational(10)), 22027);  // e^10 = 22026.47...
}

}  // namespace
}  // namespace sfc

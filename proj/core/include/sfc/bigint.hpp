#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sfc {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "P/Q", an integer "P", or a plain decimal "0.25" into an exact
/// canonicalized rational. Throws ParseError on malformed input or Q = 0.
// Canonicalized p/q; mpq_class(p, q) alone leaves common factors in place.
Rational make_rational(long p, long q);
Rational parse_rational(std::string_view text);

std::string to_decimal(const BigInt& value);
std::string to_string(const Rational& value);  // "p/q" (or "p" when q = 1)

/// Number of decimal digits of |value| (1 for zero).
std::size_t decimal_digits(const BigInt& value);

BigInt pow(const BigInt& base, unsigned long exponent);

/// Fixed-point decimal: the value is `scaled / 10^scale`, truncated toward
/// zero when produced by an approximation routine.
struct Decimal {
  BigInt scaled;
  unsigned scale = 0;

  std::string str() const;
  double to_double() const;
};

/// floor(num/den * 10^scale) / 10^scale for a nonnegative ratio.
Decimal divide_to_decimal(const BigInt& num, const BigInt& den, unsigned scale);

/// ceil(exp(x)) for rational x >= 0, computed exactly by bracketing the
/// Taylor series between rational bounds.
BigInt ceil_exp(const Rational& x);

}  // namespace sfc

#include "sfc/bigint.hpp"

#include <cctype>
#include <cstdlib>

#include "sfc/error.hpp"

namespace sfc {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw Error(ErrorKind::ParseError, "not a rational number: '" + std::string(whole) + "'");
  }
  BigInt v(std::string(s), 10);
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational make_rational(long p, long q) {
  if (q == 0) throw Error(ErrorKind::BadParameters, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if ((!int_part.empty() && !all_digits(int_part)) || !all_digits(frac_part)) {
      throw Error(ErrorKind::ParseError, "not a rational number: '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    BigInt num(digits, 10);
    BigInt den = pow(BigInt(10), frac_part.size());
    Rational r(negative ? BigInt(-num) : num, den);
    r.canonicalize();
    return r;
  }
  return Rational(parse_integer(text, text));
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

std::size_t decimal_digits(const BigInt& value) {
  if (value == 0) return 1;
  std::string s = BigInt(abs(value)).get_str(10);
  return s.size();
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::string Decimal::str() const {
  bool negative = scaled < 0;
  std::string digits = BigInt(abs(scaled)).get_str(10);
  if (scale > 0) {
    if (digits.size() <= scale) digits.insert(0, scale - digits.size() + 1, '0');
    digits.insert(digits.size() - scale, 1, '.');
  }
  return negative ? "-" + digits : digits;
}

double Decimal::to_double() const { return std::strtod(str().c_str(), nullptr); }

Decimal divide_to_decimal(const BigInt& num, const BigInt& den, unsigned scale) {
  Decimal d;
  d.scale = scale;
  BigInt scaled_num = num * pow(BigInt(10), scale);
  mpz_fdiv_q(d.scaled.get_mpz_t(), scaled_num.get_mpz_t(), den.get_mpz_t());
  return d;
}

BigInt ceil_exp(const Rational& x) {
  if (x < 0) throw Error(ErrorKind::BadParameters, "ceil_exp requires x >= 0");
  if (x == 0) return 1;
  // Partial sums S_k = sum_{j<=k} x^j/j! bound exp(x) from below. Once
  // k + 2 > 2x the tail is at most 2 * x^{k+1}/(k+1)!.
  Rational term = 1;
  Rational sum = 1;
  for (unsigned long k = 1;; ++k) {
    term *= x;
    term /= k;
    sum += term;
    if (Rational(k + 2) <= 2 * x) continue;
    Rational tail = 2 * term * x / (k + 1);
    Rational upper = sum + tail;
    BigInt lo_floor;
    BigInt hi_floor;
    mpz_fdiv_q(lo_floor.get_mpz_t(), sum.get_num_mpz_t(), sum.get_den_mpz_t());
    mpz_fdiv_q(hi_floor.get_mpz_t(), upper.get_num_mpz_t(), upper.get_den_mpz_t());
    // exp(x) is irrational for rational x != 0, so it is never an integer.
    if (lo_floor == hi_floor && Rational(hi_floor) < sum) return lo_floor + 1;
  }
}

}  // namespace sfc

#pragma once

// Exact integer / rational scalars.  Backed by GMP via Boost.Multiprecision;
// everything downstream assumes these never overflow and never round.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace eigenkit {

// et_off: operators return plain numbers instead of expression templates,
// so mixed-type arithmetic and auto stay predictable.
using BigInt =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                                  boost::multiprecision::et_off>;

// C(n, k); zero outside 0 <= k <= n so sums over shifted indices need no guards.
inline BigInt binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.backend().data(), n, static_cast<unsigned long>(k));
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.backend().data(), n);
  return r;
}

// n * (n-1) * ... * (n-k+1); equals n!/(n-k)! and vanishes for k > n.
inline BigInt falling_factorial(unsigned long n, unsigned long k) {
  if (k > n) return BigInt(0);
  BigInt r(1);
  for (unsigned long i = 0; i < k; ++i) r *= BigInt(n - i);
  return r;
}

inline BigInt pow2(unsigned long e) {
  BigInt r(1);
  r <<= e;
  return r;
}

// 1 * 3 * 5 * ... * (n-1) for even n >= 0 (the value used by even-moment
// integrals); double_factorial(0) = 1.
inline BigInt odd_double_factorial(unsigned long n) {
  BigInt r(1);
  for (unsigned long i = 1; i + 1 <= n; i += 2) r *= BigInt(i);
  return r;
}

// Floor of the square root of a nonnegative integer.
inline BigInt isqrt_floor(const BigInt& x) {
  if (x < 0) throw std::invalid_argument("isqrt_floor: negative argument");
  return boost::multiprecision::sqrt(x);
}

inline BigInt numerator(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const BigRational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const BigRational& q) { return denominator(q) == 1; }

// Accepts "p" or "p/q" with optional sign; rejects zero denominators.
// Always returns the canonical (lowest-terms, positive-denominator) form.
inline BigRational parse_rational(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return BigRational(BigInt(s));
    const BigInt num(s.substr(0, slash));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::runtime_error("zero denominator");
    BigRational q(num);
    q /= BigRational(den);  // division canonicalizes
    return q;
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rational: cannot parse '" + s + "'");
  }
}

inline std::string to_string(const BigInt& z) { return z.str(); }
inline std::string to_string(const BigRational& q) { return q.str(); }

}  // namespace eigenkit

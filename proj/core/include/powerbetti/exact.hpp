#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace powerbetti {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(const std::string& text);

// Extended-precision conversion: the high part plus the rounded residual.
inline long double to_long_double(const Rational& q) {
  const double hi = q.get_d();
  const Rational rest = q - Rational(hi);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

}  // namespace powerbetti

#pragma once

#include <string>

#include <gmpxx.h>

namespace walks {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// "p/q" with q omitted when it is 1.
inline std::string to_decimal(const Rational& v) { return v.get_str(10); }

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Parses a decimal integer or "p/q" fraction; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace walks

#pragma once

// Small GMP conveniences used across the sequence engines.

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "amc/core_arith.hpp"

namespace amc {

inline mpz_class mpz_from_u64(u64 v) {
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

inline mpz_class mpz_from_u128(u128 v) {
  mpz_class hi = mpz_from_u64(static_cast<u64>(v >> 64));
  return (hi << 64) + mpz_from_u64(static_cast<u64>(v));
}

inline u64 mpz_to_u64(const mpz_class& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
    throw domain_error("mpz_to_u64: out of range");
  u64 out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

// Natural log of a positive big integer, exact to double precision.
inline double log_mpz(const mpz_class& v) {
  if (v <= 0) throw domain_error("log_mpz: argument must be positive");
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

inline std::size_t decimal_digits(const mpz_class& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 10);  // may overestimate by one; callers re-check
}

}  // namespace amc

#pragma once

// The concatenation sequence c_n(k) = n || n+1 || ... || n+k and the direct
// (non-sieve) search for C(n).
//
// c_mod advances decade by decade: within a block where every concatenated
// value has ell digits (L = 10^ell), jumping ahead by delta splits into
//   x = L^delta * c                          (shift left)
//   y = (n+k+1) * (L^delta - 1)/(L - 1)      (delta copies of the base value)
//   z = (L^delta - delta(L-1) - 1)/(L-1)^2   (the 0,1,...,delta-1 ramp)
// The exact divisions are carried out modulo m(L-1) and m(L-1)^2 so the whole
// jump costs one modular exponentiation, independent of delta.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "amc/bigint.hpp"
#include "amc/core_arith.hpp"

namespace amc {

inline unsigned digit_count(u64 v) {
  unsigned d = 1;
  while (v >= 10) {
    v /= 10;
    ++d;
  }
  return d;
}

inline u64 pow10_u64(unsigned e) {
  if (e > 19) throw domain_error("pow10_u64: exponent too large for u64");
  u64 r = 1;
  while (e--) r *= 10;
  return r;
}

struct ConcatNumber {
  u64 n = 0;
  u64 k = 0;
  mpz_class value;
};

// The block of values with exactly ell digits: L/10 <= v < L, L = 10^ell.
struct DecadeContext {
  unsigned ell = 1;
  u64 L = 10;
  static DecadeContext containing(u64 value) {
    unsigned e = digit_count(value);
    return DecadeContext{e, pow10_u64(e)};
  }
  bool covers(u64 value) const { return value >= L / 10 && value < L; }
  friend bool operator==(const DecadeContext&, const DecadeContext&) = default;
};

// Exact big-integer concatenation n || n+1 || ... || n+k.
inline ConcatNumber c_oracle(u64 n, u64 k, u64 digit_cap = 10'000'000) {
  if (n == 0) throw domain_error("c_oracle: n must be >= 1");
  mpz_class v = mpz_from_u64(n);
  u64 digits = digit_count(n);
  for (u64 i = 1; i <= k; ++i) {
    u64 t = n + i;
    unsigned dc = digit_count(t);
    digits += dc;
    if (digits > digit_cap) throw std::length_error("c_oracle: digit cap exceeded");
    v = v * static_cast<unsigned long>(pow10_u64(dc)) + static_cast<unsigned long>(t);
  }
  return ConcatNumber{n, k, std::move(v)};
}

namespace detail {

// One in-decade jump, all moduli fitting u64. Preconditions: m*(L-1)^2 < 2^64.
inline u64 concat_step_u64(u64 c, u64 n, u64 k, u64 delta, u64 L, u64 m) {
  u64 lm1 = L - 1;
  u64 m2 = m * lm1 * lm1;
  u64 m1 = m * lm1;
  u64 x = powmod(L % m2, delta, m2);
  u64 res = mulmod(x % m, c % m, m);
  // y: representatives of (L^delta - 1) mod m(L-1) stay divisible by L-1
  u64 ynum = static_cast<u64>((u128(x % m1) + m1 - 1) % m1);
  res = addmod(res, mulmod(ynum / lm1 % m, (n + k + 1) % m, m), m);
  // z: same trick one level up, modulo m(L-1)^2
  u64 sub = static_cast<u64>((u128(delta % m2) * (lm1 % m2) + 1) % m2);
  u64 znum = static_cast<u64>((u128(x) + m2 - sub) % m2);
  return addmod(res, znum / (lm1 * lm1) % m, m);
}

inline u64 concat_step_mpz(u64 c, u64 n, u64 k, u64 delta, u64 L, u64 m) {
  mpz_class lm1 = mpz_from_u64(L - 1);
  mpz_class m2 = mpz_from_u64(m) * lm1 * lm1;
  mpz_class m1 = mpz_from_u64(m) * lm1;
  mpz_class x;
  mpz_powm(x.get_mpz_t(), mpz_from_u64(L).get_mpz_t(), mpz_from_u64(delta).get_mpz_t(),
           m2.get_mpz_t());
  mpz_class res = (x % m) * (c % m) % m;
  mpz_class ynum = (x % m1 + m1 - 1) % m1;
  res = (res + ynum / lm1 % m * mpz_from_u64((n + k + 1) % m)) % m;
  mpz_class sub = (mpz_from_u64(delta) * lm1 + 1) % m2;
  mpz_class znum = (x + m2 - sub) % m2;
  res = (res + znum / (lm1 * lm1)) % m;
  return mpz_to_u64(res);
}

}  // namespace detail

// c_n(k) mod m, decade by decade; cost is O(decades * log) and independent of
// k within a decade.
inline u64 c_mod_value(u64 n, u64 k, u64 m) {
  if (m == 0) throw domain_error("c_mod: modulus must be >= 1");
  if (m == 1) return 0;
  u64 c = n % m;
  u64 kcur = 0;
  while (kcur < k) {
    u64 next = n + kcur + 1;
    if (digit_count(next) > 18) throw domain_error("c_mod: values beyond 10^18 unsupported");
    DecadeContext decade = DecadeContext::containing(next);
    u64 kend = (decade.L - 1) - n;  // last k whose concatenated value stays in this decade
    u64 delta = std::min(k, kend) - kcur;
    u64 L = decade.L;
    bool fits = u128(L - 1) * (L - 1) <= u128(~u64(0)) / m;
    c = fits ? detail::concat_step_u64(c, n, kcur, delta, L, m)
             : detail::concat_step_mpz(c, n, kcur, delta, L, m);
    kcur += delta;
  }
  return c;
}

inline Residue c_mod(u64 n, u64 k, u64 m) { return Residue{c_mod_value(n, k, m), m}; }

// Outcome of a bounded search for C(n). Fail never claims nonexistence: it
// records how far the search went. UpperBound marks a divisor found under a
// reduced prime bound, proving only C(n) <= k.
struct SieveOutcome {
  enum class Kind { Found, Fail, UpperBound };
  Kind kind = Kind::Fail;
  u64 k = 0;
  u64 searched_to = 0;
  friend bool operator==(const SieveOutcome&, const SieveOutcome&) = default;
};

inline bool c_candidate_filtered(u64 n, u64 d) {
  if (d % 2 == 0) return true;                // c_n(k) has the parity of n+k
  if (d % 5 == 0) return true;                // last digit of c_n(k) is 4 or 9 here
  if (n % 3 == 2 && d % 3 == 0) return true;  // digit sum obstruction
  return false;
}

// Smallest k in [1, k_limit] with (n+k+1) | c_n(k), by per-candidate modular
// evaluation. The three divisibility filters are pure skips; every surviving
// candidate is tested exactly.
inline SieveOutcome compute_C_direct(u64 n, u64 k_limit) {
  if (n == 0) throw domain_error("compute_C_direct: n must be >= 1");
  for (u64 k = 1; k <= k_limit; ++k) {
    u64 d = n + k + 1;
    if (c_candidate_filtered(n, d)) continue;
    if (c_mod_value(n, k, d) == 0) return SieveOutcome{SieveOutcome::Kind::Found, k, k};
  }
  return SieveOutcome{SieveOutcome::Kind::Fail, 0, k_limit};
}

}  // namespace amc

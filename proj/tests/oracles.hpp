#pragma once

// Brute-force oracles. Everything here is deliberately independent of the
// library's computation paths: trial division instead of the segmented sieve,
// exhaustive scans instead of BSGS, big-integer products instead of residue
// scans. Expected values frozen in the tests were produced by these.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline std::mt19937_64 rng(u64 seed = 0x5eed5eed5eedull) { return std::mt19937_64(seed); }

inline std::vector<u64> trial_division_primes(u64 limit) {
  std::vector<u64> out;
  for (u64 v = 2; v <= limit; ++v) {
    bool prime = true;
    for (u64 f = 2; f * f <= v; ++f) {
      if (v % f == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(v);
  }
  return out;
}

inline u64 brute_pow_mod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  for (u64 i = 0; i < exp; ++i) r = static_cast<u64>(u128(r) * (base % m) % m);
  return r;
}

inline u64 brute_mult_order(u64 a, u64 q) {
  u64 x = a % q;
  for (u64 g = 1;; ++g) {
    if (x == 1 % q) return g;
    x = static_cast<u64>(u128(x) * a % q);
  }
}

inline std::optional<u64> brute_dlog(u64 a, u64 start, u64 target, u64 q) {
  u64 order = brute_mult_order(a, q);
  u64 x = start % q;
  for (u64 i = 0; i < order; ++i) {
    if (x == target % q) return i;
    x = static_cast<u64>(u128(x) * a % q);
  }
  return std::nullopt;
}

inline bool is_triangular(u128 r) {
  u128 s = 8 * r + 1;
  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(s)));
  while (u128(root) * root > s) --root;
  while (u128(root + 1) * (root + 1) <= s) ++root;
  return u128(root) * root == s;
}

inline u128 tri(u64 x) { return u128(x) * (x + 1) / 2; }

inline u64 brute_tau(u64 n) {
  for (u64 k = 1;; ++k) {
    if (is_triangular(tri(n) + tri(k))) return k;
  }
}

struct TriplePair {
  u64 k, m;
};

// Every [n, k, m] with k, m >= 1 and T_n + T_k = T_m, by exhaustive scan over
// k < T_n (k = T_n - 1 always works, so the range is complete).
inline std::vector<TriplePair> brute_triples(u64 n) {
  std::vector<TriplePair> out;
  for (u64 k = 1; k <= tri(n) - 1; ++k) {
    u128 r = tri(n) + tri(k);
    if (is_triangular(r)) {
      u128 s = 8 * r + 1;
      u64 root = static_cast<u64>(std::sqrt(static_cast<double>(s)));
      while (u128(root) * root > s) --root;
      while (u128(root + 1) * (root + 1) <= s) ++root;
      out.push_back(TriplePair{k, (root - 1) / 2});
    }
  }
  return out;
}

// B(n) by materializing the intermediate products as big integers.
inline u64 brute_B(u64 n) {
  mpz_class b(static_cast<unsigned long>(n));
  for (u64 k = 1;; ++k) {
    b *= static_cast<unsigned long>(n + k);
    if (mpz_divisible_ui_p(b.get_mpz_t(), static_cast<unsigned long>(n + k + 1))) return k;
  }
}

inline u64 brute_beta(u64 n) {
  mpz_class f = 1;
  for (u64 kappa = 1;; ++kappa) {
    f *= static_cast<unsigned long>(kappa);
    if (mpz_divisible_ui_p(f.get_mpz_t(), static_cast<unsigned long>(n + kappa))) return kappa;
  }
}

}  // namespace oracle

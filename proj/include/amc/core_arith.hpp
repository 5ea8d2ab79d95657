#pragma once

// Modular and prime-enumeration primitives shared by all sequence engines:
// 64-bit modular arithmetic with 128-bit intermediates, multiplicative order,
// Shanks baby-step giant-step discrete logarithm, segmented prime sieve,
// prime powers and divisor enumeration.

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace amc {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Out-of-domain input (e.g. A(2), which provably does not exist), as opposed
// to an internal computational failure.
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct Residue {
  u64 value = 0;
  u64 modulus = 1;
  friend bool operator==(const Residue&, const Residue&) = default;
};

inline Residue residue(u64 value, u64 modulus) {
  if (modulus == 0) throw domain_error("residue: modulus must be >= 1");
  return Residue{value % modulus, modulus};
}

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 addmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128(a) + b) % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

inline Residue mod_pow(u64 base, u64 exp, u64 m) {
  if (m == 0) throw domain_error("mod_pow: modulus must be >= 1");
  return Residue{powmod(base, exp, m), m};
}

inline u64 isqrt_u64(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && u128(r) * r > n) --r;
  while (u128(r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline u64 isqrt_u128(u128 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  for (int i = 0; i < 4; ++i) {
    u64 q = static_cast<u64>(n / r);
    r = (r + q) / 2;
  }
  while (u128(r) * r > n) --r;
  while (u128(r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Extended-gcd modular inverse. Requires gcd(a, m) = 1.
inline u64 inv_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (r != 1) throw domain_error("inv_mod: argument not invertible");
  return static_cast<u64>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    u64 x = powmod(a % n, d, n);
    if (x <= 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

// Brent-cycle Pollard rho; n must be odd, composite, and not tiny.
inline u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  u64 seed = 1;
  while (true) {
    ++seed;
    u64 y = seed, c = seed * 2654435761u % n, m = 128;
    if (c == 0) c = 1;
    u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = addmod(mulmod(y, y, n), c, n);
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        u64 lim = std::min(m, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = addmod(mulmod(y, y, n), c, n);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = addmod(mulmod(ys, ys, n), c, n);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
}

inline void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace detail

// Prime factorization: trial division for the easy part, Pollard rho for the rest.
inline std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<u64> primes;
  for (u64 p : {2ull, 3ull, 5ull, 7ull}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  // odd trial division up to 10^6; rho takes over for anything harder
  for (u64 f = 11; f <= 1000000 && u128(f) * f <= n; f += 2) {
    while (n % f == 0) {
      primes.push_back(f);
      n /= f;
    }
    if (f > 4096 && n > 1 && is_prime(n)) break;
  }
  if (n > 1) detail::factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1u);
  }
  return out;
}

inline u64 euler_phi(u64 n) {
  u64 phi = 1;
  for (auto [p, e] : factorize(n)) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

// Smallest g >= 1 with a^g == 1 (mod q). Throws unless gcd(a, q) = 1.
inline u64 mult_order(u64 a, u64 q) {
  if (q == 0) throw domain_error("mult_order: modulus must be positive");
  if (q == 1) return 1;
  a %= q;
  if (std::gcd(a, q) != 1) throw domain_error("mult_order: gcd(a, q) != 1");
  u64 g = euler_phi(q);
  for (auto [p, e] : factorize(g)) {
    (void)e;
    while (g % p == 0 && powmod(a, g / p, q) == 1) g /= p;
  }
  return g;
}

namespace detail {

// Shanks BSGS over a cyclic span of known order: smallest i in [0, order)
// with a^i * start == target (mod q), if any.
inline std::optional<u64> bsgs_with_order(u64 a, u64 start, u64 target, u64 q, u64 order) {
  if (q == 1) return 0;
  a %= q;
  start %= q;
  target %= q;
  u64 m = isqrt_u64(order);
  if (m * m < order) ++m;
  if (m == 0) m = 1;
  std::unordered_map<u64, u64> baby;
  baby.reserve(m * 2);
  u64 cur = target;
  for (u64 r = 0; r < m; ++r) {
    baby.emplace(cur, r);  // keys are distinct: r2-r1 < m <= order is below the order of a
    cur = mulmod(cur, a, q);
  }
  u64 giant = powmod(a, m, q);
  u64 gamma = start;
  u64 smax = (order + m - 1) / m + 1;
  for (u64 s = 0; s <= smax; ++s) {
    auto it = baby.find(gamma);
    if (it != baby.end()) {
      u64 sm = s * m;
      if (sm >= it->second) {
        u64 i = sm - it->second;
        if (i < order) return i;
        return std::nullopt;  // candidates only grow with s
      }
    }
    gamma = mulmod(gamma, giant, q);
  }
  return std::nullopt;
}

}  // namespace detail

// Smallest i >= 0 with a^i * start == target (mod q), searching i < mult_order(a, q).
inline std::optional<u64> bsgs_dlog(u64 a, Residue start, Residue target) {
  if (start.modulus != target.modulus)
    throw domain_error("bsgs_dlog: mismatched moduli");
  u64 q = start.modulus;
  if (q == 1) return 0;
  if (std::gcd(a % q, q) != 1) throw domain_error("bsgs_dlog: gcd(a, q) != 1");
  return detail::bsgs_with_order(a, start.value, target.value, q, mult_order(a, q));
}

// ---------------------------------------------------------------------------
// Prime enumeration

inline constexpr u64 kDefaultSegmentFlags = u64(1) << 20;

inline std::vector<u32> small_primes_upto(u32 n) {
  std::vector<u32> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (u32 i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = u64(i) * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

// Visits every prime in [lo, hi) in ascending order. Segmented, so hi can be
// large (10^9 and beyond) while memory stays bounded by the segment size.
template <class F>
inline void for_each_prime(u64 lo, u64 hi, F&& visit, u64 segment_flags = kDefaultSegmentFlags) {
  if (hi <= 2 || lo >= hi) return;
  if (lo < 2) lo = 2;
  u64 root = isqrt_u64(hi - 1);
  if (root > 0xFFFFFFFFull) throw domain_error("for_each_prime: range too large");
  auto base = small_primes_upto(static_cast<u32>(root));
  std::vector<std::uint8_t> flags;
  for (u64 seg_lo = lo; seg_lo < hi; ) {
    u64 seg_hi = std::min(hi, seg_lo + segment_flags);
    flags.assign(seg_hi - seg_lo, 1);
    for (u64 p : base) {
      u64 start = std::max(p * p, (seg_lo + p - 1) / p * p);
      for (u64 j = start; j < seg_hi; j += p) flags[j - seg_lo] = 0;
    }
    for (u64 v = seg_lo; v < seg_hi; ++v) {
      if (flags[v - seg_lo]) visit(v);
    }
    seg_lo = seg_hi;
  }
}

inline std::vector<u64> primes_upto(u64 L, u64 segment_flags = kDefaultSegmentFlags) {
  if (L < 2) throw domain_error("primes_upto: L must be >= 2");
  std::vector<u64> out;
  for_each_prime(2, L + 1, [&](u64 p) { out.push_back(p); }, segment_flags);
  return out;
}

struct PrimePower {
  u64 p = 2;       // prime
  unsigned j = 1;  // exponent
  u64 q = 2;       // p^j
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline std::vector<PrimePower> prime_powers_of(u64 p, u64 L) {
  if (p > L) throw domain_error("prime_powers_of: p must be <= L");
  std::vector<PrimePower> out;
  u64 q = p;
  unsigned j = 1;
  while (true) {
    out.push_back(PrimePower{p, j, q});
    if (q > L / p) break;
    q *= p;
    ++j;
  }
  return out;
}

inline std::vector<u64> odd_divisors(u64 n) {
  if (n == 0) throw domain_error("odd_divisors: n must be >= 1");
  while (n % 2 == 0) n /= 2;
  std::vector<u64> divs{1};
  for (auto [p, e] : factorize(n)) {
    std::size_t prev = divs.size();
    u64 pe = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t t = 0; t < prev; ++t) divs.push_back(divs[t] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace amc

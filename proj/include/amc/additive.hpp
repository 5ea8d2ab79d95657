#pragma once

// The additive stopping sequence A(n) and its triangular-number theory:
// intermediate terms a_n(k), the stopping record, enumeration of triangular
// triples [n, k, m] with T_n + T_k = T_m from odd factorizations of 2*T_n,
// the minimizer tau(n), and the cross-identity q_n = tau(n-1).

#include <vector>

#include "amc/bigint.hpp"
#include "amc/core_arith.hpp"

namespace amc {

// One table row of the additive sequence: smallest k >= 1 such that
// d = n+k+1 divides a_n(k), with p = a_n(k) and q = p/d.
struct StopRecord {
  u64 n = 0;
  u64 k = 0;
  u64 d = 0;
  mpz_class p;
  mpz_class q;
};

inline mpz_class a_term(u64 n, u64 k) {
  if (n < 3) throw domain_error("a_term: defined for n >= 3");
  // (k+1)*n + k*(k+1)/2
  mpz_class kk = mpz_from_u64(k);
  return (kk + 1) * mpz_from_u64(n) + kk * (kk + 1) / 2;
}

inline StopRecord compute_A(u64 n) {
  if (n == 2) throw domain_error("A(2) does not exist");
  if (n < 3) throw domain_error("A(n) is defined for n >= 3");
  const u64 witness = (n - 1) * (n - 1) - 2;  // a_n(witness) is divisible by n(n-1)
  for (u64 k = 1;; ++k) {
    u64 d = n + k + 1;
    u128 p = u128(k + 1) * n + u128(k) * (k + 1) / 2;
    if (p % d == 0) {
      StopRecord rec{n, k, d, mpz_from_u128(p), 0};
      rec.q = rec.p / static_cast<unsigned long>(d);
      return rec;
    }
    if (k > witness) throw std::logic_error("compute_A: closed-form bound violated");
  }
}

// Ordered triple with T_n + T_k = T_m. Trivial iff any entry is zero.
struct TriangularTriple {
  u64 n = 0, k = 0, m = 0;
  friend bool operator==(const TriangularTriple&, const TriangularTriple&) = default;
};

inline u128 triangular(u64 x) { return u128(x) * (x + 1) / 2; }

// A factorization 2S = d * e with d odd; every pair (k, m) with T_m - T_k = S
// arises from exactly one of these.
struct OddFactorization {
  u64 d = 1, e = 2;
  u64 k() const { return (std::max(d, e) - std::min(d, e) - 1) / 2; }
  u64 m() const { return (std::max(d, e) + std::min(d, e) - 1) / 2; }
};

inline std::vector<OddFactorization> odd_factorizations(u64 two_s) {
  std::vector<OddFactorization> out;
  for (u64 d : odd_divisors(two_s)) out.push_back(OddFactorization{d, two_s / d});
  return out;
}

namespace detail {

// n and n+1 are coprime, so factor them separately and merge.
inline std::vector<std::pair<u64, unsigned>> factorize_n_times_n_plus_1(u64 n) {
  auto f = factorize(n);
  auto g = factorize(n + 1);
  f.insert(f.end(), g.begin(), g.end());
  std::sort(f.begin(), f.end());
  return f;
}

inline std::vector<u64> odd_divisors_of_n_times_n_plus_1(u64 n) {
  std::vector<u64> divs{1};
  for (auto [p, e] : factorize_n_times_n_plus_1(n)) {
    if (p == 2) continue;
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

}  // namespace detail

// All nontrivial triples [n, k, m], one per odd divisor of 2*T_n = n(n+1)
// except the divisor yielding k = 0; ascending by k. Always contains
// [n, T_n - 1, T_n] for n >= 2.
inline std::vector<TriangularTriple> triangular_triples(u64 n) {
  if (n == 0) throw domain_error("triangular_triples: n must be >= 1");
  if (n >= (u64(1) << 32)) throw domain_error("triangular_triples: n out of supported range");
  u64 N = n * (n + 1);
  std::vector<TriangularTriple> out;
  for (u64 d : detail::odd_divisors_of_n_times_n_plus_1(n)) {
    OddFactorization f{d, N / d};
    u64 k = f.k();
    if (k == 0) continue;
    out.push_back(TriangularTriple{n, k, f.m()});
  }
  std::sort(out.begin(), out.end(),
            [](const TriangularTriple& a, const TriangularTriple& b) { return a.k < b.k; });
  return out;
}

// Smallest k > 0 such that T_n + T_k is triangular, via the odd divisor d of
// n(n+1), d not in {n, n+1}, minimizing |d - n(n+1)/d|. Ties give the same k
// since k depends only on |d - e|.
inline u64 tau(u64 n) {
  if (n < 2) throw domain_error("tau: defined for n >= 2");
  if (n >= (u64(1) << 32)) throw domain_error("tau: n out of supported range");
  u64 N = n * (n + 1);
  u64 best_diff = ~u64(0);
  for (u64 d : detail::odd_divisors_of_n_times_n_plus_1(n)) {
    if (d == n || d == n + 1) continue;
    u64 e = N / d;
    u64 diff = d > e ? d - e : e - d;
    best_diff = std::min(best_diff, diff);
  }
  return (best_diff - 1) / 2;
}

// Theorem cross-check: the quotient column of the A table equals tau(n-1),
// with tau computed by the divisor-minimization path above.
inline bool verify_qn_tau(u64 n) {
  if (n < 3) throw domain_error("verify_qn_tau: defined for n >= 3");
  return compute_A(n).q == mpz_from_u64(tau(n - 1));
}

// The m with T_{n-1} + T_{q_n} = T_m (final column of the A table).
inline u64 triple_m_for(u64 n) {
  StopRecord rec = compute_A(n);
  u64 q = mpz_to_u64(rec.q);
  u128 R = triangular(n - 1) + triangular(q);
  u128 s = 8 * R + 1;
  u64 r = isqrt_u128(s);
  if (u128(r) * r != s || r % 2 == 0)
    throw std::logic_error("triple_m_for: 8R+1 is not an odd square");
  return (r - 1) / 2;
}

}  // namespace amc

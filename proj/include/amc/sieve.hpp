#pragma once

// Sieving engine for C(n) over one decade [L/10, L) of n+k values.
//
// For every odd prime power q <= prime_bound, the k with q | n+k+1 form an
// arithmetic progression; along it, mu_i = c_n(k0 + i q) mod q obeys the
// affine recurrence mu <- a mu + b with constants a, b depending only on
// (q, L). Hits (mu == 0) are therefore either absent or themselves an
// arithmetic progression, located by a discrete logarithm (prime q), by one
// modular division (a == 1), or by explicit stepping (remaining prime
// powers). Each hit multiplies T[n+k] by p; at the end T[n+k] equals the odd
// part of gcd(c_n(k), n+k+1), and k wins when T[n+k] = n+k+1.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "amc/concat.hpp"
#include "amc/core_arith.hpp"

namespace amc {

enum class TableMode { Exact64, LogByte };

struct SieveConfig {
  u64 n = 0;
  u64 L = 0;            // decade bound, a power of ten
  u64 prime_bound = 0;  // 0 -> L; anything smaller demotes Found to UpperBound
  u64 lo = 0, hi = 0;   // sub-interval over n+k; 0 -> [max(L/10, n+1), L)
  unsigned threads = 0; // 0 -> hardware parallelism
  TableMode table_mode = TableMode::Exact64;
  bool evens_only = false;  // store only even n+k (odd divisors); halves memory
  u64 prime_segment = kDefaultSegmentFlags;
  std::string checkpoint_path;      // empty -> no checkpointing
  unsigned checkpoint_every = 16;   // prime segments between checkpoints
  bool resume = false;
  unsigned stop_after_segments = 0; // fault-injection hook for resume tests
  bool keep_table = false;          // copy raw table into the result
};

struct SieveStats {
  u64 prime_powers = 0;
  u64 hits = 0;
  u64 bsgs_solves = 0;
  u64 stepped = 0;
};

struct SieveResult {
  SieveOutcome outcome;
  u64 table_digest = 0;
  bool completed = true;  // false only when stop_after_segments interrupted the run
  SieveStats stats;
  std::vector<u64> table;  // logical entry values, when keep_table is set
};

inline u64 fnv1a(const void* data, std::size_t len, u64 h = 14695981039346656037ull) {
  auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

// Smallest k with n+k >= window_lo and q | n+k+1 (t = (-1 - window_lo) mod q).
inline u64 initial_k(u64 n, u64 q, u64 window_lo) {
  if (q < 2) throw domain_error("initial_k: q must be >= 2");
  if (window_lo < n) throw domain_error("initial_k: window below the start value");
  u64 r = (window_lo % q + 1) % q;
  u64 t = r == 0 ? 0 : q - r;
  return window_lo - n + t;
}

// Lemma-1 constants: a = L^q mod q and b = (L^q - qL + q - 1)/(L-1)^2 mod q,
// the division done exactly through arithmetic modulo q(L-1)^2.
inline std::pair<Residue, Residue> lemma1_coeffs(u64 q, u64 L) {
  if (q < 2 || L < 10) throw domain_error("lemma1_coeffs: need q >= 2 and L >= 10");
  u64 a = powmod(L % q, q, q);
  u64 lm1 = L - 1;
  u64 b;
  if (u128(lm1) * lm1 <= u128(~u64(0)) / q) {
    u64 m2 = q * lm1 * lm1;
    u64 x = powmod(L % m2, q, m2);
    u64 sub = static_cast<u64>((u128(q % m2) * (lm1 % m2) + 1) % m2);
    u64 bnum = static_cast<u64>((u128(x) + m2 - sub) % m2);
    b = bnum / (lm1 * lm1) % q;
  } else {
    mpz_class zlm1 = mpz_from_u64(lm1);
    mpz_class m2 = mpz_from_u64(q) * zlm1 * zlm1;
    mpz_class x;
    mpz_powm(x.get_mpz_t(), mpz_from_u64(L).get_mpz_t(), mpz_from_u64(q).get_mpz_t(),
             m2.get_mpz_t());
    mpz_class bnum = (x + m2 - (mpz_from_u64(q) * zlm1 + 1) % m2) % m2;
    b = mpz_to_u64(bnum / (zlm1 * zlm1) % q);
  }
  return {Residue{a, q}, Residue{b, q}};
}

// Hits of one prime power inside a window, as k = k0 + (i0 + j g) q, j >= 0.
// g == 0 means the first hit does not repeat within the window.
struct ProgressionHit {
  PrimePower q;
  u64 k0 = 0;
  u64 i0 = 0;
  u64 g = 0;
  Residue lambda;  // b/(a-1) on the discrete-log path, 0 elsewhere
  Residue a, b;
};

namespace detail {

struct OrbitClass {
  enum class Kind { None, Progression, Stepped } kind = Kind::None;
  u64 i0 = 0;
  u64 g = 0;
  u64 lambda = 0;
  bool used_bsgs = false;
};

// Decide where mu_i = a mu_{i-1} + b (mod q) vanishes. Exact progressions for
// a == 0 (powers of five), a == 1 (one modular division), and prime q
// (baby-step giant-step); anything else is left to the caller's stepping loop.
inline OrbitClass classify_orbit(const PrimePower& pp, u64 a, u64 b, u64 mu0) {
  const u64 q = pp.q;
  OrbitClass out;
  if (a == 0) {
    // mu is mu0 once, then constant b
    if (mu0 == 0 && b == 0) out = {OrbitClass::Kind::Progression, 0, 1, 0, false};
    else if (mu0 == 0) out = {OrbitClass::Kind::Progression, 0, 0, 0, false};
    else if (b == 0) out = {OrbitClass::Kind::Progression, 1, 1, 0, false};
    return out;
  }
  if (a == 1) {
    // arithmetic: mu0 + i b == 0 (mod q)
    if (b == 0) {
      if (mu0 == 0) out = {OrbitClass::Kind::Progression, 0, 1, 0, false};
      return out;
    }
    u64 g0 = std::gcd(b, q);
    if (mu0 % g0 != 0) return out;
    u64 qq = q / g0;
    u64 i0 = mulmod((qq - mu0 / g0 % qq) % qq, inv_mod(b / g0, qq), qq);
    out = {OrbitClass::Kind::Progression, i0, qq, 0, false};
    return out;
  }
  if (pp.j == 1) {
    // geometric: mu'_i = a^i mu'_0 with mu' = mu + lambda, lambda = b/(a-1)
    u64 lambda = mulmod(b, inv_mod(a - 1, q), q);
    u64 mup0 = addmod(mu0, lambda, q);
    if (lambda == 0) {
      if (mu0 == 0) out = {OrbitClass::Kind::Progression, 0, 1, 0, false};
      return out;
    }
    if (mup0 == 0) { out.lambda = lambda; return out; }
    u64 order = mult_order(a, q);
    auto i0 = bsgs_with_order(a, mup0, lambda, q, order);
    if (i0) out = {OrbitClass::Kind::Progression, *i0, order, lambda, true};
    else out.lambda = lambda;
    return out;
  }
  out.kind = OrbitClass::Kind::Stepped;
  return out;
}

}  // namespace detail

// The hit set of prime power q over window [lo, hi) of n+k, made explicit.
// Returns nullopt when the window contains no hits.
inline std::optional<ProgressionHit> progression_for(u64 n, const PrimePower& pp, u64 L,
                                                     u64 lo, u64 hi) {
  const u64 q = pp.q;
  u64 k0 = initial_k(n, q, lo);
  if (n + k0 >= hi) return std::nullopt;
  u64 mu0 = c_mod_value(n, k0, q);
  auto [ar, br] = lemma1_coeffs(q, L);
  ProgressionHit hit{pp, k0, 0, 0, Residue{0, q}, ar, br};
  auto cls = detail::classify_orbit(pp, ar.value, br.value, mu0);
  using K = detail::OrbitClass::Kind;
  if (cls.kind == K::Progression) {
    if (n + k0 + u128(cls.i0) * q >= hi) return std::nullopt;
    hit.i0 = cls.i0;
    hit.g = cls.g;
    hit.lambda = Residue{cls.lambda, q};
    return hit;
  }
  if (cls.kind == K::None) return std::nullopt;
  // stepping fallback: scan the window, then report the observed progression
  u64 mu = mu0;
  std::optional<u64> first;
  u64 second = 0;
  for (u64 i = 0, v = n + k0; v < hi; ++i, v += q) {
    if (mu == 0) {
      if (!first) first = i;
      else { second = i; break; }
    }
    mu = addmod(mulmod(ar.value, mu, q), br.value, q);
  }
  if (!first) return std::nullopt;
  hit.i0 = *first;
  hit.g = second ? second - *first : 0;
  return hit;
}

namespace detail {

class SieveTable {
 public:
  SieveTable(u64 lo, u64 hi, TableMode mode, bool evens_only)
      : lo_(lo), hi_(hi), mode_(mode), evens_only_(evens_only) {
    base_ = evens_only_ ? lo + (lo % 2) : lo;
    std::size_t size = evens_only_ ? (hi > base_ ? (hi - base_ + 1) / 2 : 0) : hi - lo;
    log_scale_ = 255.0 / std::log(static_cast<double>(hi));
    if (mode_ == TableMode::Exact64) {
      exact_ = std::vector<std::atomic<u64>>(size);
      for (auto& e : exact_) e.store(1, std::memory_order_relaxed);
    } else {
      bytes_ = std::vector<std::atomic<std::uint8_t>>(size);
      for (auto& e : bytes_) e.store(0, std::memory_order_relaxed);
    }
  }

  bool tracks(u64 v) const { return v >= lo_ && v < hi_ && !(evens_only_ && v % 2); }

  void mark(u64 v, u64 p) {
    if (evens_only_ && v % 2) return;  // odd n+k means even divisor: never a winner
    std::size_t i = index(v);
    if (mode_ == TableMode::Exact64) {
      u64 cur = exact_[i].load(std::memory_order_relaxed);
      while (!exact_[i].compare_exchange_weak(cur, cur * p, std::memory_order_relaxed)) {
      }
    } else {
      auto inc = static_cast<unsigned>(
          std::max(1l, std::lround(log_scale_ * std::log(static_cast<double>(p)))));
      std::uint8_t cur = bytes_[i].load(std::memory_order_relaxed);
      while (true) {
        auto next = static_cast<std::uint8_t>(std::min<unsigned>(255, cur + inc));
        if (bytes_[i].compare_exchange_weak(cur, next, std::memory_order_relaxed)) break;
      }
    }
  }

  u64 exact_at(u64 v) const { return exact_[index(v)].load(std::memory_order_relaxed); }
  std::uint8_t byte_at(u64 v) const { return bytes_[index(v)].load(std::memory_order_relaxed); }

  double log_target(u64 d) const { return log_scale_ * std::log(static_cast<double>(d)); }
  // worst-case rounding drift: <= 0.5 byte per accumulated odd prime factor
  double log_tolerance() const {
    return 0.5 * std::log(static_cast<double>(hi_)) / std::log(3.0) + 1.5;
  }

  std::size_t entry_count() const {
    return mode_ == TableMode::Exact64 ? exact_.size() : bytes_.size();
  }

  u64 logical_value(std::size_t i) const {
    return mode_ == TableMode::Exact64 ? exact_[i].load(std::memory_order_relaxed)
                                       : bytes_[i].load(std::memory_order_relaxed);
  }

  u64 digest() const {
    u64 h = 14695981039346656037ull;
    for (std::size_t i = 0; i < entry_count(); ++i) {
      u64 v = logical_value(i);
      h = fnv1a(&v, sizeof v, h);
    }
    return h;
  }

  void store_logical(std::size_t i, u64 v) {
    if (mode_ == TableMode::Exact64)
      exact_[i].store(v, std::memory_order_relaxed);
    else
      bytes_[i].store(static_cast<std::uint8_t>(v), std::memory_order_relaxed);
  }

 private:
  std::size_t index(u64 v) const { return evens_only_ ? (v - base_) / 2 : v - lo_; }

  u64 lo_, hi_, base_;
  TableMode mode_;
  bool evens_only_;
  double log_scale_;
  std::vector<std::atomic<u64>> exact_;
  std::vector<std::atomic<std::uint8_t>> bytes_;
};

// Enumerate and mark the hits of one prime power over [lo, hi).
inline void sieve_prime_power(u64 n, const PrimePower& pp, u64 L, u64 lo, u64 hi,
                              SieveTable& table, SieveStats& stats) {
  const u64 q = pp.q;
  u64 k0 = initial_k(n, q, lo);
  u64 v0 = n + k0;
  if (v0 >= hi) return;
  ++stats.prime_powers;
  u64 mu0 = c_mod_value(n, k0, q);
  auto [ar, br] = lemma1_coeffs(q, L);
  u64 a = ar.value, b = br.value;
  u64 steps = (hi - 1 - v0) / q + 1;

  auto step_scan = [&] {
    u64 mu = mu0;
    for (u64 v = v0; v < hi; v += q) {
      if (mu == 0) {
        table.mark(v, pp.p);
        ++stats.hits;
      }
      mu = addmod(mulmod(a, mu, q), b, q);
      ++stats.stepped;
    }
  };

  // For a handful of steps the scan is cheaper than any solve.
  if (a > 1 && pp.j == 1 && steps <= 4 * isqrt_u64(q) + 64) {
    step_scan();
    return;
  }
  auto cls = classify_orbit(pp, a, b, mu0);
  using K = OrbitClass::Kind;
  if (cls.kind == K::None) return;
  if (cls.kind == K::Stepped) {
    step_scan();
    return;
  }
  if (cls.used_bsgs) ++stats.bsgs_solves;
  for (u128 i = cls.i0;; i += cls.g) {
    u128 v = v0 + i * q;
    if (v >= hi) break;
    table.mark(static_cast<u64>(v), pp.p);
    ++stats.hits;
    if (cls.g == 0) break;
  }
}

}  // namespace detail

inline bool is_power_of_ten(u64 v) {
  if (v == 0) return false;
  while (v % 10 == 0) v /= 10;
  return v == 1;
}

// Recompute one table entry exactly: the product over odd prime powers
// q = p^j <= prime_bound dividing both d and c_n(k), one factor p per power.
inline u64 sieve_exact_entry(u64 n, u64 k, u64 d, u64 prime_bound) {
  u64 acc = 1;
  for (auto [p, e] : factorize(d)) {
    if (p == 2) continue;
    u64 q = 1;
    for (unsigned j = 1; j <= e; ++j) {
      if (q > prime_bound / p) break;
      q *= p;
      if (c_mod_value(n, k, q) != 0) break;
      acc *= p;
    }
  }
  return acc;
}

namespace detail {

struct CheckpointHeader {
  char magic[8] = {'A', 'M', 'C', 'S', 'V', '1', 0, 0};
  u64 n, L, prime_bound, lo, hi;
  std::uint8_t mode, evens_only, pad[6] = {};
  u64 next_prime;   // resume point: all primes below are fully sieved
  u64 entry_count;
  u64 payload_digest;
};

inline void write_checkpoint(const std::string& path, const SieveConfig& cfg, u64 lo, u64 hi,
                             u64 prime_bound, u64 next_prime, const SieveTable& table) {
  CheckpointHeader h{};
  h.n = cfg.n;
  h.L = cfg.L;
  h.prime_bound = prime_bound;
  h.lo = lo;
  h.hi = hi;
  h.mode = static_cast<std::uint8_t>(cfg.table_mode);
  h.evens_only = cfg.evens_only ? 1 : 0;
  h.next_prime = next_prime;
  h.entry_count = table.entry_count();
  std::vector<u64> payload(table.entry_count());
  for (std::size_t i = 0; i < payload.size(); ++i) payload[i] = table.logical_value(i);
  h.payload_digest = fnv1a(payload.data(), payload.size() * sizeof(u64));
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("checkpoint: cannot write " + tmp);
    os.write(reinterpret_cast<const char*>(&h), sizeof h);
    os.write(reinterpret_cast<const char*>(payload.data()),
             static_cast<std::streamsize>(payload.size() * sizeof(u64)));
    if (!os) throw std::runtime_error("checkpoint: write failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("checkpoint: rename failed");
}

// Returns the resume prime, restoring table contents; throws on any mismatch.
inline std::optional<u64> read_checkpoint(const std::string& path, const SieveConfig& cfg,
                                          u64 lo, u64 hi, u64 prime_bound, SieveTable& table) {
  std::ifstream is(path, std::ios::binary);
  if (!is) return std::nullopt;
  CheckpointHeader h{};
  is.read(reinterpret_cast<char*>(&h), sizeof h);
  if (!is || std::memcmp(h.magic, "AMCSV1\0", 8) != 0)
    throw std::invalid_argument("checkpoint: unrecognized file");
  if (h.n != cfg.n || h.L != cfg.L || h.prime_bound != prime_bound || h.lo != lo ||
      h.hi != hi || h.mode != static_cast<std::uint8_t>(cfg.table_mode) ||
      h.evens_only != (cfg.evens_only ? 1 : 0) || h.entry_count != table.entry_count())
    throw std::invalid_argument("checkpoint: configuration mismatch");
  std::vector<u64> payload(h.entry_count);
  is.read(reinterpret_cast<char*>(payload.data()),
          static_cast<std::streamsize>(payload.size() * sizeof(u64)));
  if (!is) throw std::invalid_argument("checkpoint: truncated payload");
  if (fnv1a(payload.data(), payload.size() * sizeof(u64)) != h.payload_digest)
    throw std::invalid_argument("checkpoint: digest mismatch");
  for (std::size_t i = 0; i < payload.size(); ++i) table.store_logical(i, payload[i]);
  return h.next_prime;
}

}  // namespace detail

inline SieveResult run_sieve_detailed(const SieveConfig& cfg) {
  if (cfg.n == 0) throw std::invalid_argument("run_sieve: n must be >= 1");
  if (!is_power_of_ten(cfg.L) || cfg.L < 10)
    throw std::invalid_argument("run_sieve: L must be a power of ten >= 10");
  const u64 L = cfg.L;
  const u64 lo = cfg.lo ? cfg.lo : std::max(L / 10, cfg.n + 1);
  const u64 hi = cfg.hi ? cfg.hi : L;
  if (lo < L / 10 || hi > L || lo >= hi)
    throw std::invalid_argument("run_sieve: sub-interval outside the decade");
  if (lo < cfg.n + 1) throw std::invalid_argument("run_sieve: window must start above n");
  const u64 prime_bound = cfg.prime_bound ? cfg.prime_bound : L;
  if (prime_bound < 2 || prime_bound > L)
    throw std::invalid_argument("run_sieve: prime bound must lie in [2, L]");
  unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());

  detail::SieveTable table(lo, hi, cfg.table_mode, cfg.evens_only);
  SieveResult result;

  u64 p_start = 3;
  if (cfg.resume && !cfg.checkpoint_path.empty()) {
    if (auto next = detail::read_checkpoint(cfg.checkpoint_path, cfg, lo, hi, prime_bound, table))
      p_start = *next;
  }

  const u64 p_limit = std::min(prime_bound, hi);  // q > hi divides no d <= hi
  std::atomic<u64> pp_count{0}, hit_count{0}, bsgs_count{0}, step_count{0};
  unsigned segments_done = 0;
  bool interrupted = false;

  for (u64 seg_lo = p_start; seg_lo <= p_limit && !interrupted; ) {
    u64 seg_hi = std::min(p_limit + 1, seg_lo + cfg.prime_segment);
    std::vector<u64> primes;
    for_each_prime(std::max<u64>(3, seg_lo), seg_hi, [&](u64 p) { primes.push_back(p); },
                   cfg.prime_segment);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      SieveStats local;
      for (std::size_t i = next.fetch_add(1); i < primes.size(); i = next.fetch_add(1)) {
        u64 p = primes[i];
        u64 q = p;
        unsigned j = 1;
        while (true) {
          detail::sieve_prime_power(cfg.n, PrimePower{p, j, q}, L, lo, hi, table, local);
          if (q > p_limit / p) break;
          q *= p;
          ++j;
        }
      }
      pp_count += local.prime_powers;
      hit_count += local.hits;
      bsgs_count += local.bsgs_solves;
      step_count += local.stepped;
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    seg_lo = seg_hi;
    ++segments_done;
    bool at_end = seg_lo > p_limit;
    if (!cfg.checkpoint_path.empty() &&
        (at_end || segments_done % std::max(1u, cfg.checkpoint_every) == 0))
      detail::write_checkpoint(cfg.checkpoint_path, cfg, lo, hi, prime_bound, seg_lo, table);
    if (cfg.stop_after_segments && segments_done >= cfg.stop_after_segments && !at_end)
      interrupted = true;
  }

  result.stats = SieveStats{pp_count.load(), hit_count.load(), bsgs_count.load(),
                            step_count.load()};
  if (interrupted) {
    result.completed = false;
    result.outcome = SieveOutcome{SieveOutcome::Kind::Fail, 0, 0};
    result.table_digest = table.digest();
    return result;
  }

  // final scan: smallest k with T[n+k] = n+k+1; only odd divisors can win
  std::optional<u64> found;
  u64 v = std::max(lo, cfg.n + 1);
  if (v % 2) ++v;
  for (; v < hi; v += 2) {
    u64 d = v + 1;
    bool hit;
    if (cfg.table_mode == TableMode::Exact64) {
      hit = table.exact_at(v) == d;
    } else {
      double target = table.log_target(d);
      std::uint8_t byte = table.byte_at(v);
      hit = (byte == 255 || std::abs(byte - target) <= table.log_tolerance()) &&
            sieve_exact_entry(cfg.n, v - cfg.n, d, prime_bound) == d;
    }
    if (hit) {
      found = v - cfg.n;
      break;
    }
  }
  if (found) {
    auto kind = prime_bound < L ? SieveOutcome::Kind::UpperBound : SieveOutcome::Kind::Found;
    result.outcome = SieveOutcome{kind, *found, *found};
  } else {
    result.outcome = SieveOutcome{SieveOutcome::Kind::Fail, 0, hi - 1 - cfg.n};
  }
  result.table_digest = table.digest();
  if (cfg.keep_table) {
    result.table.resize(table.entry_count());
    for (std::size_t i = 0; i < result.table.size(); ++i) result.table[i] = table.logical_value(i);
  }
  return result;
}

inline SieveOutcome run_sieve(const SieveConfig& cfg) { return run_sieve_detailed(cfg).outcome; }

// ---------------------------------------------------------------------------
// Decade-by-decade hunt: direct search below the first full decade, then one
// sieve per decade until found or max_L is exhausted.

struct HuntRecord {
  u64 L = 0;
  SieveOutcome outcome;
  u64 table_digest = 0;
};

struct HuntResult {
  SieveOutcome outcome;
  std::vector<HuntRecord> decades;
};

inline HuntResult hunt_C_detailed(u64 n, u64 max_L, TableMode mode = TableMode::Exact64,
                                  unsigned threads = 0) {
  if (n == 0) throw domain_error("hunt_C: n must be >= 1");
  HuntResult out;
  u64 d0 = 10;
  while (d0 < n + 1) d0 *= 10;
  if (d0 - 1 > n) {
    u64 prefix_limit = std::min(d0 - 1 - n, max_L > n ? max_L - 1 - n : 0);
    if (prefix_limit >= 1) {
      SieveOutcome direct = compute_C_direct(n, prefix_limit);
      if (direct.kind == SieveOutcome::Kind::Found) {
        out.outcome = direct;
        return out;
      }
    }
  }
  for (u64 L = 10 * d0; L <= max_L; L *= 10) {
    SieveConfig cfg;
    cfg.n = n;
    cfg.L = L;
    cfg.table_mode = mode;
    cfg.threads = threads;
    SieveResult res = run_sieve_detailed(cfg);
    out.decades.push_back(HuntRecord{L, res.outcome, res.table_digest});
    if (res.outcome.kind == SieveOutcome::Kind::Found) {
      out.outcome = res.outcome;
      return out;
    }
  }
  out.outcome = SieveOutcome{SieveOutcome::Kind::Fail, 0, max_L > n ? max_L - 1 - n : 0};
  return out;
}

inline SieveOutcome hunt_C(u64 n, u64 max_L, TableMode mode = TableMode::Exact64,
                           unsigned threads = 0) {
  return hunt_C_detailed(n, max_L, mode, threads).outcome;
}

}  // namespace amc

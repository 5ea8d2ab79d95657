#pragma once

// The multiplicative stopping sequence B(n), the equivalent formulation
// beta(n) (smallest kappa with n+kappa | kappa!), the smoothness variant
// beta'(n), and the asymptotic machinery: Dickman's rho function, the local
// smooth-density correction, and the main-term estimator Bbar(n).

#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>
#include <vector>

#include "amc/bigint.hpp"
#include "amc/core_arith.hpp"

namespace amc {

inline constexpr double kEulerGamma = 0.5772156649015328606;

struct MultStopRecord {
  u64 n = 0;
  u64 k = 0;
  u64 d = 0;
  mpz_class p;  // b_n(k) = (n+k)!/(n-1)!
  mpz_class q;  // p / d
};

// Smallest k >= 1 with (n+k+1) | b_n(k). The scan never materializes the
// factorial quotient: each candidate divisor d gets a fresh O(k) modular
// product, which is cheap because k stays below n (and tiny in practice).
// The big integer p is reconstructed only for the returned record.
inline MultStopRecord compute_B(u64 n) {
  if (n == 0) throw domain_error("compute_B: n must be >= 1");
  for (u64 k = 1;; ++k) {
    u64 d = n + k + 1;
    u64 r = n % d;
    for (u64 i = 1; i <= k && r != 0; ++i) r = mulmod(r, n + i, d);
    if (r == 0) {
      MultStopRecord rec{n, k, d, 1, 0};
      for (u64 i = 0; i <= k; ++i) rec.p *= static_cast<unsigned long>(n + i);
      rec.q = rec.p / static_cast<unsigned long>(d);
      return rec;
    }
    if (k > std::max<u64>(n, 16)) throw std::logic_error("compute_B: upper bound violated");
  }
}

inline unsigned nu_p(u64 v, u64 p) {
  unsigned e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

// Legendre: nu_p(kappa!) = sum_{i>=1} floor(kappa / p^i).
inline u64 legendre_nu_factorial(u64 kappa, u64 p) {
  u64 total = 0;
  for (u64 pw = p; pw <= kappa; ) {
    total += kappa / pw;
    if (pw > kappa / p) break;
    pw *= p;
  }
  return total;
}

// Smallest kappa > 0 such that (n + kappa) divides kappa!, decided through
// p-adic valuations of n+kappa against Legendre's formula — kappa! is never
// formed.
inline u64 beta(u64 n) {
  for (u64 kappa = 1;; ++kappa) {
    bool divides = true;
    for (auto [p, e] : factorize(n + kappa)) {
      if (legendre_nu_factorial(kappa, p) < e) {
        divides = false;
        break;
      }
    }
    if (divides) return kappa;
    if (kappa > std::max<u64>(n + 2, 32)) throw std::logic_error("beta: upper bound violated");
  }
}

inline bool is_smooth(u64 v, u64 bound) {
  for (u64 f = 2; f <= bound && v > 1; ++f) {
    while (v % f == 0) v /= f;
  }
  return v == 1;
}

// Smallest k >= 1 such that n+k is k-smooth.
inline u64 beta_prime(u64 n) {
  if (n == 0) throw domain_error("beta_prime: n must be >= 1");
  for (u64 k = 1;; ++k) {
    if (is_smooth(n + k, k)) return k;
  }
}

inline bool verify_beta_identity(u64 n) { return beta(n) == compute_B(n).k + 1; }

struct SmoothnessRecord {
  u64 n = 0;
  u64 beta = 0;        // smallest kappa with (n+kappa) | kappa!
  u64 beta_prime = 0;  // smallest k with n+k k-smooth; never exceeds beta
};

inline SmoothnessRecord smoothness_record(u64 n) {
  return SmoothnessRecord{n, beta(n), beta_prime(n)};
}

// ---------------------------------------------------------------------------
// Dickman's rho.
//
// rho = 1 on [0,1]; for u > 1, u rho'(u) = -rho(u-1). Each unit interval
// [j, j+1] stores a Chebyshev interpolant of w_j(x) = rho(j+x)/rho(j), built
// from the previous interval through 64-point Gauss-Legendre integration of
//   rho(j+x) = rho(j) - rho(j-1) * Integral_0^x w_{j-1}(s)/(j+s) ds.
// Keeping every interval scaled to its own left endpoint keeps the relative
// error near machine precision even deep in the tail, where rho underflows
// respectable floating-point formats long before it stops being interesting.
class DickmanRho {
 public:
  explicit DickmanRho(unsigned max_u = 100) {
    build_quadrature();
    rho_int_.assign(max_u + 1, 0.0);
    rho_int_[0] = 1.0;
    rho_int_[1] = 1.0;
    coeff_.resize(max_u);
    built_ = 1;
    for (unsigned j = 1; j < max_u; ++j) {
      double ratio = rho_int_[j - 1] / rho_int_[j];
      std::array<double, kNodes> values{};
      for (int i = 0; i < kNodes; ++i)
        values[i] = 1.0 - ratio * integral_to(j, cheb_x_[i]);
      fit(values, coeff_[j]);
      double w_right = values[kNodes - 1];
      rho_int_[j + 1] = rho_int_[j] * w_right;
      built_ = j + 1;
      if (!(rho_int_[j + 1] > 1e-305)) break;  // double underflow; stop extending
    }
  }

  double operator()(double u) const {
    if (!(u > 0.0)) throw domain_error("dickman_rho: u must be positive");
    if (u <= 1.0) return 1.0;
    if (u >= static_cast<double>(built_)) return 0.0;
    auto j = static_cast<unsigned>(u);
    return rho_int_[j] * eval(coeff_[j], u - j);
  }

  double rho_at(unsigned j) const {
    if (j >= rho_int_.size() || j > built_) throw domain_error("rho_at: beyond built range");
    return rho_int_[j];
  }

 private:
  static constexpr int kNodes = 48;
  static constexpr int kQuad = 64;
  using Coeffs = std::array<double, kNodes>;

  std::vector<double> rho_int_;  // rho at integer arguments
  std::vector<Coeffs> coeff_;    // coeff_[j] represents w_j on [j, j+1], j >= 1
  unsigned built_ = 1;
  std::array<double, kNodes> cheb_x_{};   // Chebyshev-Lobatto nodes mapped to [0,1], ascending
  std::array<double, kQuad> quad_x_{};    // Gauss-Legendre nodes on [0,1]
  std::array<double, kQuad> quad_w_{};

  void build_quadrature() {
    constexpr double pi = 3.14159265358979323846;
    for (int i = 0; i < kNodes; ++i)
      cheb_x_[i] = 0.5 * (1.0 - std::cos(pi * i / (kNodes - 1)));
    // Gauss-Legendre on [-1,1] by Newton on P_kQuad, then mapped to [0,1].
    for (int i = 0; i < kQuad; ++i) {
      double x = std::cos(pi * (i + 0.75) / (kQuad + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= kQuad; ++k) {
          double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        pp = kQuad * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / pp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      quad_x_[i] = 0.5 * (1.0 - x);  // ascending on [0,1]
      quad_w_[i] = 1.0 / ((1.0 - x * x) * pp * pp);
    }
  }

  // integral of w_{j-1}(s) / (j+s) over [0, x]
  double integral_to(unsigned j, double x) const {
    if (x <= 0.0) return 0.0;
    double acc = 0.0;
    for (int i = 0; i < kQuad; ++i) {
      double s = x * quad_x_[i];
      double w = j == 1 ? 1.0 : eval(coeff_[j - 1], s);
      acc += quad_w_[i] * w / (j + s);
    }
    return acc * x;
  }

  static void fit(const std::array<double, kNodes>& values, Coeffs& out) {
    constexpr double pi = 3.14159265358979323846;
    // values are sampled at y_i = -cos(pi i/(N-1)); reverse to the standard
    // descending-node order for the cosine transform.
    std::array<double, kNodes> v{};
    for (int i = 0; i < kNodes; ++i) v[i] = values[kNodes - 1 - i];
    for (int k = 0; k < kNodes; ++k) {
      double acc = 0.5 * (v[0] + (k % 2 ? -v[kNodes - 1] : v[kNodes - 1]));
      for (int i = 1; i < kNodes - 1; ++i)
        acc += v[i] * std::cos(pi * k * i / (kNodes - 1));
      out[k] = 2.0 * acc / (kNodes - 1);
    }
    out[0] *= 0.5;
    out[kNodes - 1] *= 0.5;
  }

  static double eval(const Coeffs& c, double x) {
    double y = 2.0 * x - 1.0;
    double b1 = 0.0, b2 = 0.0;
    for (int k = kNodes - 1; k >= 1; --k) {
      double b0 = 2.0 * y * b1 - b2 + c[k];
      b2 = b1;
      b1 = b0;
    }
    return y * b1 - b2 + c[0];
  }
};

inline const DickmanRho& dickman() {
  static const DickmanRho table(100);
  return table;
}

inline double dickman_rho(double u) { return dickman()(u); }

// Local density of k-smooth numbers near n: rho(u) minus Kruppa's correction
// gamma * rho(u-1) / log n, with u = log n / log k.
struct RhoEstimate {
  double u = 0.0;
  double rho = 0.0;
  double local_correction = 0.0;
};

inline RhoEstimate local_density(const mpz_class& n, u64 k) {
  if (k < 2) throw domain_error("local_density: k must be >= 2");
  if (n < 3) throw domain_error("local_density: n must be >= 3");
  double ln_n = log_mpz(n);
  double u = ln_n / std::log(static_cast<double>(k));
  if (u <= 1.0) throw domain_error("local_density: requires u = log n / log k > 1");
  return RhoEstimate{u, dickman_rho(u), kEulerGamma * dickman_rho(u - 1.0) / ln_n};
}

// Main-term estimator exp( sqrt( (1/2) log n loglog n ) ).
inline double b_bar(const mpz_class& n) {
  if (n < 3) throw domain_error("b_bar: n must be >= 3");
  double ln = log_mpz(n);
  return std::exp(std::sqrt(0.5 * ln * std::log(ln)));
}

inline double b_bar(u64 n) {
  if (n < 3) throw domain_error("b_bar: n must be >= 3");
  double ln = std::log(static_cast<double>(n));
  return std::exp(std::sqrt(0.5 * ln * std::log(ln)));
}

// Plot data: one record per line, n<TAB>B(n)<TAB>Bbar(n), n ascending.
// Bbar is undefined below n = 3 and printed as nan there.
inline void write_plot_data(std::ostream& os, u64 n_lo, u64 n_hi) {
  char buf[64];
  for (u64 n = n_lo; n <= n_hi; ++n) {
    double bb = n >= 3 ? b_bar(n) : std::nan("");
    std::snprintf(buf, sizeof buf, "%.10g", bb);
    os << n << '\t' << compute_B(n).k << '\t' << buf << '\n';
  }
}

// Fraction of n in [lo, lo+count) with beta'(n) < beta(n); reported, never
// asserted — the interesting decades are far beyond unit-test scale.
struct DecadeStats {
  u64 lo = 0;
  u64 count = 0;
  u64 beta_prime_less = 0;
  double fraction() const { return count ? static_cast<double>(beta_prime_less) / count : 0.0; }
};

inline DecadeStats beta_decade_stats(u64 lo, u64 count, unsigned threads = 0) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<u64> next{0};
  std::atomic<u64> less{0};
  auto worker = [&] {
    constexpr u64 chunk = 512;
    u64 local = 0;
    for (u64 base = next.fetch_add(chunk); base < count; base = next.fetch_add(chunk)) {
      u64 end = std::min(count, base + chunk);
      for (u64 i = base; i < end; ++i) {
        u64 n = lo + i;
        if (beta_prime(n) < beta(n)) ++local;
      }
    }
    less.fetch_add(local);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return DecadeStats{lo, count, less.load()};
}

}  // namespace amc

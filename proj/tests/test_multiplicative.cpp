#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "amc/multiplicative.hpp"
#include "amc/table_io.hpp"
#include "oracles.hpp"

using namespace amc;

TEST_CASE("compute_B table rows") {
  MultStopRecord r1 = compute_B(1);
  CHECK(r1.k == 4);
  CHECK(r1.d == 6);
  CHECK(r1.p == 120);
  CHECK(r1.q == 20);

  MultStopRecord r11 = compute_B(11);
  CHECK(r11.k == 6);
  CHECK(r11.d == 18);
  CHECK(r11.p == 98017920);
  CHECK(r11.q == 5445440);

  // the quotient the typeset table splits as "46 20"
  MultStopRecord r7 = compute_B(7);
  CHECK(r7.k == 4);
  CHECK(r7.d == 12);
  CHECK(r7.p == 55440);
  CHECK(r7.q == 4620);

  CHECK_THROWS_AS(compute_B(0), domain_error);
}

TEST_CASE("compute_B agrees with the big-integer oracle up to 200") {
  for (u64 n = 1; n <= 200; ++n) REQUIRE(compute_B(n).k == oracle::brute_B(n));
}

TEST_CASE("B(n) <= n-1 for n >= 3") {
  for (u64 n = 3; n <= 2000; ++n) REQUIRE(compute_B(n).k <= n - 1);
}

TEST_CASE("beta examples") {
  CHECK(beta(2) == 4);
  CHECK(beta(1) == 5);
  CHECK(beta(0) == 1);
  for (u64 n = 0; n <= 120; ++n) REQUIRE(beta(n) == oracle::brute_beta(n));
}

TEST_CASE("beta identity: beta(n) = B(n) + 1") {
  CHECK(verify_beta_identity(1));
  CHECK(verify_beta_identity(12));
  for (u64 n = 1; n <= 2000; ++n) REQUIRE(verify_beta_identity(n));
  auto gen = oracle::rng(7);
  for (int i = 0; i < 10000; ++i) {
    u64 n = gen() % 100000 + 1;
    CAPTURE(n);
    REQUIRE(verify_beta_identity(n));
  }
}

TEST_CASE("beta_prime") {
  CHECK(beta_prime(2) == 2);  // 2+2 is 2-smooth
  CHECK(beta_prime(10) == 5); // 15 = 3*5 is the first k-smooth n+k
  CHECK_THROWS_AS(beta_prime(0), domain_error);
  for (u64 n = 2; n <= 3000; ++n) {
    u64 bp = beta_prime(n);
    REQUIRE(bp >= 2);  // 1-smooth means 1, which n+1 never is
    REQUIRE(bp <= beta(n));
    REQUIRE(is_smooth(n + bp, bp));
    for (u64 k = 1; k < bp; ++k) REQUIRE_FALSE(is_smooth(n + k, k));
  }
}

TEST_CASE("dickman_rho closed forms") {
  CHECK(dickman_rho(1.0) == 1.0);
  CHECK(dickman_rho(0.3) == 1.0);
  CHECK(std::abs(dickman_rho(2.0) - (1.0 - std::log(2.0))) < 1e-9);
  auto gen = oracle::rng(8);
  for (int i = 0; i < 200; ++i) {
    double u = 1.0 + (gen() % 10000) / 10000.0;
    REQUIRE(std::abs(dickman_rho(u) - (1.0 - std::log(u))) < 1e-9);
  }
  CHECK_THROWS_AS(dickman_rho(0.0), domain_error);
  CHECK_THROWS_AS(dickman_rho(-1.0), domain_error);
}

TEST_CASE("dickman_rho tabulated values") {
  // frozen from an independent cumulative-Simpson integration of the delay ODE
  auto rel = [](double got, double want) { return std::abs(got / want - 1.0); };
  CHECK(rel(dickman_rho(3.0), 0.0486083882911349) < 1e-7);
  CHECK(rel(dickman_rho(4.0), 0.00491092564776083) < 1e-7);
  CHECK(rel(dickman_rho(5.0), 3.54724700456040e-4) < 1e-7);
  CHECK(rel(dickman_rho(6.0), 1.96496963539553e-5) < 1e-7);
  CHECK(rel(dickman_rho(7.0), 8.74566995329392e-7) < 1e-7);
  // strictly decreasing and positive past u = 1
  double prev = 1.0;
  for (double u = 1.1; u < 20.0; u += 0.1) {
    double r = dickman_rho(u);
    REQUIRE(r > 0.0);
    REQUIRE(r < prev);
    prev = r;
  }
}

TEST_CASE("local_density at the smoothness record") {
  mpz_class n;
  mpz_ui_pow_ui(n.get_mpz_t(), 10, 25);
  n += 2554;
  RhoEstimate est = local_density(n, 29972);
  CHECK(std::abs(est.u - 5.584451089084364) < 1e-12);
  CHECK(std::abs(est.rho / 6.72995152092452e-5 - 1.0) < 1e-6);
  CHECK(std::abs(est.local_correction / 1.098828789682139e-5 - 1.0) < 1e-6);
}

TEST_CASE("local_density small cases") {
  RhoEstimate est = local_density(mpz_class(1000000), 100);
  CHECK(std::abs(est.u - 3.0) < 1e-12);
  CHECK(std::abs(est.rho / 0.0486083882911349 - 1.0) < 1e-7);
  // just above u = 1 the correction uses rho(u-1) = 1
  RhoEstimate tight = local_density(mpz_class(1000), 500);
  CHECK(std::abs(tight.local_correction - kEulerGamma * 1.0 / std::log(1000.0)) < 1e-12);
  CHECK_THROWS_AS(local_density(mpz_class(100), 100), domain_error);
  CHECK_THROWS_AS(local_density(mpz_class(2), 10), domain_error);
  CHECK_THROWS_AS(local_density(mpz_class(1000), 1), domain_error);
}

TEST_CASE("b_bar") {
  double expect16 = std::exp(std::sqrt(0.5 * std::log(16.0) * std::log(std::log(16.0))));
  CHECK(b_bar(16) == Catch::Approx(expect16).epsilon(1e-15));
  CHECK_THROWS_AS(b_bar(2), domain_error);
  double prev = b_bar(3);
  for (u64 n = 4; n <= 4000; n += 7) {
    double cur = b_bar(n);
    REQUIRE(cur > prev);
    prev = cur;
  }
  // the mpz overload reaches far beyond 64 bits
  mpz_class huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 10, 30);
  double ln = 30.0 * std::log(10.0);
  CHECK(b_bar(huge) == Catch::Approx(std::exp(std::sqrt(0.5 * ln * std::log(ln)))).epsilon(1e-12));
}

TEST_CASE("plot data format") {
  std::ostringstream os;
  write_plot_data(os, 1, 40);
  std::istringstream is(os.str());
  std::string line;
  u64 rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    auto t1 = line.find('\t');
    auto t2 = line.find('\t', t1 + 1);
    REQUIRE(t1 != std::string::npos);
    REQUIRE(t2 != std::string::npos);
    u64 n = std::stoull(line.substr(0, t1));
    u64 b = std::stoull(line.substr(t1 + 1, t2 - t1 - 1));
    REQUIRE(n == rows);
    REQUIRE(b == compute_B(n).k);
    if (n >= 3) REQUIRE(std::stod(line.substr(t2 + 1)) == Catch::Approx(b_bar(n)));
  }
  CHECK(rows == 40);
}

TEST_CASE("beta decade stats") {
  DecadeStats one = beta_decade_stats(100000, 1500, 1);
  DecadeStats two = beta_decade_stats(100000, 1500, 2);
  CHECK(one.beta_prime_less == two.beta_prime_less);
  CHECK(one.count == 1500);
  CHECK(one.fraction() >= 0.0);
  CHECK(one.fraction() <= 1.0);
  // spot-check the counter against the definitions
  u64 direct = 0;
  for (u64 n = 100000; n < 101500; ++n)
    if (beta_prime(n) < beta(n)) ++direct;
  CHECK(one.beta_prime_less == direct);
}

TEST_CASE("nu_p and Legendre") {
  CHECK(nu_p(48, 2) == 4);
  CHECK(nu_p(48, 3) == 1);
  CHECK(nu_p(49, 2) == 0);
  CHECK(legendre_nu_factorial(10, 2) == 8);   // nu_2(10!) = 5+2+1
  CHECK(legendre_nu_factorial(10, 3) == 4);   // 3+1
  CHECK(legendre_nu_factorial(100, 97) == 1);
  CHECK(legendre_nu_factorial(5, 7) == 0);
}

TEST_CASE("bundled B table verifies") {
  auto report = verify_dataset(std::string(AMC_DATA_DIR) + "/b_table.tsv");
  CHECK(report.dataset == "b");
  CHECK(report.checked == 12);
  CHECK(report.pass());
}

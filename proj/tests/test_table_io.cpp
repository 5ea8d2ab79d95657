#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "amc/table_io.hpp"
#include "oracles.hpp"

using namespace amc;

TEST_CASE("format_mpz digest form") {
  mpz_class small("123456789");
  CHECK(format_mpz(small) == "123456789");

  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 12000);
  big += 12345;
  std::string digest = format_mpz(big);
  CHECK(digest.starts_with("big{digits=12001;head=10000000000000000000;"));
  CHECK(digest.find("tail=00000000000000012345") != std::string::npos);
  CHECK(digest.find(";fnv=") != std::string::npos);
  CHECK(format_mpz(big, true) == big.get_str());
}

TEST_CASE("range parsing") {
  CHECK(parse_range("3..17") == std::pair<u64, u64>{3, 17});
  CHECK(parse_range("5") == std::pair<u64, u64>{5, 5});
  CHECK_THROWS(parse_range("9..2"));
  CHECK_THROWS(parse_range("x..y"));
}

TEST_CASE("magnitude parsing") {
  CHECK(parse_magnitude("100000") == 100000);
  CHECK(parse_magnitude("1e5") == 100000);
  CHECK(parse_magnitude("5e9") == 5000000000ull);
  CHECK(parse_magnitude("2.5e3") == 2500);
  CHECK(parse_magnitude("10^13") == 10000000000000ull);
  CHECK_THROWS(parse_magnitude("2.5e0"));
  CHECK_THROWS(parse_magnitude("1e30"));
}

TEST_CASE("A rows round-trip losslessly") {
  std::vector<ARow> rows;
  for (u64 n = 2; n <= 17; ++n) rows.push_back(make_a_row(n));
  for (Format f : {Format::Csv, Format::Tsv, Format::Json}) {
    for (const ARow& row : rows) {
      CAPTURE(static_cast<int>(f), row.n);
      REQUIRE(parse_a_row(serialize(row, f), f) == row);
    }
  }
}

TEST_CASE("B rows round-trip losslessly") {
  for (Format f : {Format::Csv, Format::Tsv, Format::Json}) {
    for (u64 n = 1; n <= 12; ++n) {
      BRow plain = make_b_row(n, false);
      BRow with = make_b_row(n, true);
      CAPTURE(static_cast<int>(f), n);
      REQUIRE(parse_b_row(serialize(plain, f), f) == plain);
      REQUIRE(parse_b_row(serialize(with, f), f) == with);
    }
  }
}

TEST_CASE("C rows round-trip losslessly") {
  CRow found{7, {SieveOutcome::Kind::Found, 13, 13}};
  CRow fail{158, {SieveOutcome::Kind::Fail, 0, 100000}};
  CRow ub{539, {SieveOutcome::Kind::UpperBound, 887969738466613ull, 887969738466613ull}};
  for (Format f : {Format::Csv, Format::Tsv, Format::Json}) {
    for (const CRow& row : {found, fail, ub}) {
      CAPTURE(static_cast<int>(f), row.n);
      REQUIRE(parse_c_row(serialize(row, f), f) == row);
    }
  }
}

TEST_CASE("csv escaping survives hostile error text") {
  ARow row;
  row.n = 2;
  row.error = "contains, comma and \"quotes\"";
  REQUIRE(parse_a_row(serialize(row, Format::Csv), Format::Csv) == row);
}

TEST_CASE("verify_dataset catches corruption") {
  std::string good = std::string(AMC_DATA_DIR) + "/a_table.tsv";
  REQUIRE(verify_dataset(good).pass());

  std::ifstream in(good);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto pos = content.find("8\t47\t56\t1512\t27\t28");
  REQUIRE(pos != std::string::npos);
  content.replace(pos, 18, "8\t47\t56\t1512\t26\t28");
  std::string bad_path = "/tmp/amc_bad_table.tsv";
  {
    std::ofstream out(bad_path, std::ios::trunc);
    out << content;
  }
  VerifyReport report = verify_dataset(bad_path);
  REQUIRE_FALSE(report.pass());
  REQUIRE(report.mismatches.size() == 1);
  CHECK(report.mismatches[0].find("n=8") != std::string::npos);
  CHECK(report.mismatches[0].find("26") != std::string::npos);
  CHECK(report.mismatches[0].find("27") != std::string::npos);
  std::remove(bad_path.c_str());
}

TEST_CASE("outcome labels") {
  CHECK(outcome_label(SieveOutcome::Kind::Found) == "found");
  CHECK(outcome_label(SieveOutcome::Kind::Fail) == "fail");
  CHECK(outcome_label(SieveOutcome::Kind::UpperBound) == "upper-bound");
}

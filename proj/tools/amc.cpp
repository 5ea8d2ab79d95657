// Command-line front end: compute the three stopping sequences, reproduce the
// reference tables, run sieve campaigns, emit plot data, and cross-check the
// bundled expected-value files.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "amc/amc.hpp"

namespace {

amc::Format parse_format(const std::string& s) {
  if (s == "csv") return amc::Format::Csv;
  if (s == "tsv") return amc::Format::Tsv;
  if (s == "json") return amc::Format::Json;
  throw CLI::ValidationError("--format must be csv, tsv, or json");
}

unsigned default_threads() {
  if (const char* env = std::getenv("AMC_THREADS")) {
    unsigned v = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    if (v > 0) return v;
  }
  return 0;  // engines fall back to hardware parallelism
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::trunc);
  if (!file) throw CLI::ValidationError("cannot open output file " + path);
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"additive, multiplicative, and concatenation stopping sequences"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow a subcommand
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "worker threads for parallel engines (0 = hardware)");

  std::string format_name = "tsv";
  bool full_digits = false;
  std::string out_path;

  // --- a ---------------------------------------------------------------
  auto* cmd_a = app.add_subcommand("a", "additive stopping table: n, k, d, p, q, m");
  std::string a_range;
  cmd_a->add_option("range", a_range, "inclusive range, e.g. 3..17")->required();
  cmd_a->add_option("--format", format_name, "csv, tsv, or json");
  cmd_a->add_flag("--full-digits", full_digits, "never abbreviate big integers");
  cmd_a->add_option("-o,--output", out_path, "write to a file instead of stdout");

  // --- b ---------------------------------------------------------------
  auto* cmd_b = app.add_subcommand("b", "multiplicative stopping table: n, k, d, p, q");
  std::string b_range;
  bool with_bbar = false;
  std::string plot_path;
  cmd_b->add_option("range", b_range, "inclusive range, e.g. 1..12")->required();
  cmd_b->add_flag("--bbar", with_bbar, "append the Bbar(n) estimator column");
  cmd_b->add_option("--plot-data", plot_path, "write n<TAB>B(n)<TAB>Bbar(n) to this file");
  cmd_b->add_option("--format", format_name, "csv, tsv, or json");
  cmd_b->add_flag("--full-digits", full_digits, "never abbreviate big integers");
  cmd_b->add_option("-o,--output", out_path, "write to a file instead of stdout");

  // --- c ---------------------------------------------------------------
  auto* cmd_c = app.add_subcommand("c", "concatenation sequence search for one n");
  amc::u64 c_n = 0;
  std::string limit_str, l_str, max_l_str, prime_bound_str, subinterval, table_mode = "exact64";
  std::string checkpoint;
  bool use_sieve = false, use_hunt = false, evens_only = false, resume = false;
  cmd_c->add_option("n", c_n, "start value")->required();
  cmd_c->add_option("--limit", limit_str, "direct search bound on k (e.g. 2e5)");
  cmd_c->add_flag("--sieve", use_sieve, "run the sieving algorithm on one decade");
  cmd_c->add_option("--L", l_str, "decade bound, a power of ten (e.g. 1e5 or 10^5)");
  cmd_c->add_flag("--hunt", use_hunt, "direct search, then sieve successive decades");
  cmd_c->add_option("--max-L", max_l_str, "largest decade bound for --hunt");
  cmd_c->add_option("--prime-bound", prime_bound_str,
                    "sieve only prime powers up to this bound (< L proves an upper bound)");
  cmd_c->add_option("--subinterval", subinterval, "restrict to n+k in lo..hi within the decade");
  cmd_c->add_option("--table-mode", table_mode, "exact64 or logbyte");
  cmd_c->add_flag("--evens-only", evens_only, "store only even n+k entries (half memory)");
  cmd_c->add_option("--checkpoint", checkpoint, "checkpoint file for long campaigns");
  cmd_c->add_flag("--resume", resume, "resume from the checkpoint file");
  cmd_c->add_option("--format", format_name, "csv, tsv, or json");

  // --- verify ----------------------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify", "recompute a bundled expected-values file");
  std::string dataset_path, max_c_str = "200000";
  cmd_verify->add_option("dataset", dataset_path, "path to a data/*.tsv file")->required();
  cmd_verify->add_option("--max-c", max_c_str, "recompute C rows only up to this value");

  // --- bstats ----------------------------------------------------------
  auto* cmd_bstats = app.add_subcommand(
      "bstats", "fraction of n in [lo, lo+count) with beta'(n) < beta(n)");
  std::string bs_lo_str, bs_count_str;
  cmd_bstats->add_option("--lo", bs_lo_str, "start of the range (e.g. 1e5)")->required();
  cmd_bstats->add_option("--count", bs_count_str, "how many n to scan")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    amc::Format format = parse_format(format_name);
    std::ofstream out_file;

    if (*cmd_a) {
      auto [lo, hi] = amc::parse_range(a_range);
      std::ostream& os = open_output(out_file, out_path);
      std::string header = amc::a_header(format);
      if (!header.empty()) os << header << '\n';
      for (amc::u64 n = lo; n <= hi; ++n)
        os << amc::serialize(amc::make_a_row(n), format, full_digits) << '\n';
      return 0;
    }

    if (*cmd_b) {
      auto [lo, hi] = amc::parse_range(b_range);
      if (!plot_path.empty()) {
        std::ofstream pf(plot_path, std::ios::trunc);
        if (!pf) throw std::runtime_error("cannot open " + plot_path);
        amc::write_plot_data(pf, lo, hi);
        std::cerr << "wrote plot data for n = " << lo << ".." << hi << " to " << plot_path
                  << '\n';
        return 0;
      }
      std::ostream& os = open_output(out_file, out_path);
      std::string header = amc::b_header(format, with_bbar);
      if (!header.empty()) os << header << '\n';
      for (amc::u64 n = lo; n <= hi; ++n)
        os << amc::serialize(amc::make_b_row(n, with_bbar), format, full_digits) << '\n';
      return 0;
    }

    if (*cmd_c) {
      amc::CRow row;
      row.n = c_n;
      if (use_sieve) {
        if (l_str.empty()) throw std::runtime_error("--sieve requires --L");
        amc::SieveConfig cfg;
        cfg.n = c_n;
        cfg.L = amc::parse_magnitude(l_str);
        cfg.threads = threads;
        cfg.table_mode = table_mode == "logbyte" ? amc::TableMode::LogByte
                                                 : amc::TableMode::Exact64;
        cfg.evens_only = evens_only;
        cfg.checkpoint_path = checkpoint;
        cfg.resume = resume;
        if (!prime_bound_str.empty()) cfg.prime_bound = amc::parse_magnitude(prime_bound_str);
        if (!subinterval.empty()) {
          auto [slo, shi] = amc::parse_range(subinterval);
          cfg.lo = slo;
          cfg.hi = shi;
        }
        row.outcome = amc::run_sieve(cfg);
      } else if (use_hunt) {
        if (max_l_str.empty()) throw std::runtime_error("--hunt requires --max-L");
        row.outcome = amc::hunt_C(c_n, amc::parse_magnitude(max_l_str),
                                  table_mode == "logbyte" ? amc::TableMode::LogByte
                                                          : amc::TableMode::Exact64,
                                  threads);
      } else {
        if (limit_str.empty()) throw std::runtime_error("c needs --limit, --sieve, or --hunt");
        row.outcome = amc::compute_C_direct(c_n, amc::parse_magnitude(limit_str));
      }
      std::cout << amc::serialize(row, format) << '\n';
      return 0;
    }

    if (*cmd_verify) {
      amc::VerifyReport report =
          amc::verify_dataset(dataset_path, amc::parse_magnitude(max_c_str));
      for (const auto& m : report.mismatches) std::cout << "MISMATCH " << m << '\n';
      std::cout << (report.pass() ? "PASS" : "FAIL") << " dataset=" << report.dataset
                << " checked=" << report.checked << " skipped=" << report.skipped
                << " mismatches=" << report.mismatches.size() << '\n';
      return report.pass() ? 0 : 1;
    }

    if (*cmd_bstats) {
      amc::u64 lo = amc::parse_magnitude(bs_lo_str);
      amc::u64 count = amc::parse_magnitude(bs_count_str);
      amc::DecadeStats stats = amc::beta_decade_stats(lo, count, threads);
      std::printf("range=[%llu,%llu) beta_prime<beta: %llu/%llu = %.4f%%\n",
                  static_cast<unsigned long long>(lo),
                  static_cast<unsigned long long>(lo + count),
                  static_cast<unsigned long long>(stats.beta_prime_less),
                  static_cast<unsigned long long>(stats.count), 100.0 * stats.fraction());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

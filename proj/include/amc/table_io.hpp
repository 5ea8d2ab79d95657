#pragma once

// Table rows for the command-line front end: the A and B stop records, C
// outcomes, lossless CSV/TSV/JSON-lines serialization, and verification of
// bundled expected-value datasets.

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "amc/additive.hpp"
#include "amc/concat.hpp"
#include "amc/multiplicative.hpp"
#include "amc/sieve.hpp"

namespace amc {

enum class Format { Csv, Tsv, Json };

inline constexpr std::size_t kFullDigitLimit = 10000;

// Big integers print in full up to kFullDigitLimit digits; beyond that a
// digest of the form big{digits=N;head=...;tail=...;fnv=...} unless full
// output is forced.
inline std::string format_mpz(const mpz_class& v, bool full_digits = false) {
  std::string s = v.get_str();
  if (full_digits || s.size() <= kFullDigitLimit) return s;
  std::string head = s.substr(0, 20);
  std::string tail = s.substr(s.size() - 20);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(s.data(), s.size())));
  return "big{digits=" + std::to_string(s.size()) + ";head=" + head + ";tail=" + tail +
         ";fnv=" + std::string(buf) + "}";
}

struct ARow {
  u64 n = 0;
  bool ok = false;
  u64 k = 0, d = 0, m = 0;
  mpz_class p, q;
  std::string error;
  friend bool operator==(const ARow& a, const ARow& b) {
    return a.n == b.n && a.ok == b.ok && a.k == b.k && a.d == b.d && a.m == b.m &&
           a.p == b.p && a.q == b.q && a.error == b.error;
  }
};

struct BRow {
  u64 n = 0, k = 0, d = 0;
  mpz_class p, q;
  std::optional<double> bbar;
  friend bool operator==(const BRow& a, const BRow& b) {
    return a.n == b.n && a.k == b.k && a.d == b.d && a.p == b.p && a.q == b.q &&
           a.bbar == b.bbar;
  }
};

struct CRow {
  u64 n = 0;
  SieveOutcome outcome;
  friend bool operator==(const CRow&, const CRow&) = default;
};

inline ARow make_a_row(u64 n) {
  ARow row;
  row.n = n;
  try {
    StopRecord rec = compute_A(n);
    row.ok = true;
    row.k = rec.k;
    row.d = rec.d;
    row.p = rec.p;
    row.q = rec.q;
    row.m = triple_m_for(n);
  } catch (const domain_error& e) {
    row.error = e.what();
  }
  return row;
}

inline BRow make_b_row(u64 n, bool with_bbar = false) {
  MultStopRecord rec = compute_B(n);
  BRow row{rec.n, rec.k, rec.d, rec.p, rec.q, std::nullopt};
  if (with_bbar && n >= 3) row.bbar = b_bar(n);
  return row;
}

// --- serialization ----------------------------------------------------------

namespace detail {

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::vector<std::string> split_fields(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == sep) {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

inline u64 parse_u64(const std::string& s) {
  u64 v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("not an unsigned integer: '" + s + "'");
  return v;
}

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline std::string a_header(Format f) {
  if (f == Format::Json) return "";
  char sep = f == Format::Csv ? ',' : '\t';
  std::string h = "n";
  for (const char* c : {"k", "d", "p", "q", "m", "error"}) h += sep + std::string(c);
  return h;
}

inline std::string serialize(const ARow& r, Format f, bool full_digits = false) {
  if (f == Format::Json) {
    nlohmann::json j;
    j["n"] = r.n;
    if (r.ok) {
      j["k"] = r.k;
      j["d"] = r.d;
      j["p"] = format_mpz(r.p, full_digits);
      j["q"] = format_mpz(r.q, full_digits);
      j["m"] = r.m;
    } else {
      j["error"] = r.error;
    }
    return j.dump();
  }
  char sep = f == Format::Csv ? ',' : '\t';
  std::ostringstream os;
  os << r.n << sep;
  if (r.ok)
    os << r.k << sep << r.d << sep << format_mpz(r.p, full_digits) << sep
       << format_mpz(r.q, full_digits) << sep << r.m << sep;
  else
    os << sep << sep << sep << sep << sep
       << (f == Format::Csv ? detail::csv_escape(r.error) : r.error);
  return os.str();
}

inline ARow parse_a_row(const std::string& line, Format f) {
  ARow r;
  if (f == Format::Json) {
    auto j = nlohmann::json::parse(line);
    r.n = j.at("n").get<u64>();
    if (j.contains("error")) {
      r.error = j["error"].get<std::string>();
    } else {
      r.ok = true;
      r.k = j.at("k").get<u64>();
      r.d = j.at("d").get<u64>();
      r.p = mpz_class(j.at("p").get<std::string>());
      r.q = mpz_class(j.at("q").get<std::string>());
      r.m = j.at("m").get<u64>();
    }
    return r;
  }
  auto fields = detail::split_fields(line, f == Format::Csv ? ',' : '\t');
  if (fields.size() != 7) throw std::invalid_argument("A row needs 7 fields");
  r.n = detail::parse_u64(fields[0]);
  if (fields[1].empty()) {
    r.error = fields[6];
  } else {
    r.ok = true;
    r.k = detail::parse_u64(fields[1]);
    r.d = detail::parse_u64(fields[2]);
    r.p = mpz_class(fields[3]);
    r.q = mpz_class(fields[4]);
    r.m = detail::parse_u64(fields[5]);
  }
  return r;
}

inline std::string b_header(Format f, bool with_bbar) {
  if (f == Format::Json) return "";
  char sep = f == Format::Csv ? ',' : '\t';
  std::string h = "n";
  for (const char* c : {"k", "d", "p", "q"}) h += sep + std::string(c);
  if (with_bbar) h += sep + std::string("bbar");
  return h;
}

inline std::string serialize(const BRow& r, Format f, bool full_digits = false) {
  if (f == Format::Json) {
    nlohmann::json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["d"] = r.d;
    j["p"] = format_mpz(r.p, full_digits);
    j["q"] = format_mpz(r.q, full_digits);
    if (r.bbar) j["bbar"] = *r.bbar;
    return j.dump();
  }
  char sep = f == Format::Csv ? ',' : '\t';
  std::ostringstream os;
  os << r.n << sep << r.k << sep << r.d << sep << format_mpz(r.p, full_digits) << sep
     << format_mpz(r.q, full_digits);
  if (r.bbar) os << sep << detail::format_double(*r.bbar);
  return os.str();
}

inline BRow parse_b_row(const std::string& line, Format f) {
  BRow r;
  if (f == Format::Json) {
    auto j = nlohmann::json::parse(line);
    r.n = j.at("n").get<u64>();
    r.k = j.at("k").get<u64>();
    r.d = j.at("d").get<u64>();
    r.p = mpz_class(j.at("p").get<std::string>());
    r.q = mpz_class(j.at("q").get<std::string>());
    if (j.contains("bbar")) r.bbar = j["bbar"].get<double>();
    return r;
  }
  auto fields = detail::split_fields(line, f == Format::Csv ? ',' : '\t');
  if (fields.size() != 5 && fields.size() != 6)
    throw std::invalid_argument("B row needs 5 or 6 fields");
  r.n = detail::parse_u64(fields[0]);
  r.k = detail::parse_u64(fields[1]);
  r.d = detail::parse_u64(fields[2]);
  r.p = mpz_class(fields[3]);
  r.q = mpz_class(fields[4]);
  if (fields.size() == 6) r.bbar = std::stod(fields[5]);
  return r;
}

inline std::string outcome_label(SieveOutcome::Kind k) {
  switch (k) {
    case SieveOutcome::Kind::Found: return "found";
    case SieveOutcome::Kind::UpperBound: return "upper-bound";
    default: return "fail";
  }
}

inline std::string serialize(const CRow& r, Format f) {
  if (f == Format::Json) {
    nlohmann::json j;
    j["n"] = r.n;
    j["outcome"] = outcome_label(r.outcome.kind);
    if (r.outcome.kind != SieveOutcome::Kind::Fail) j["k"] = r.outcome.k;
    j["searched_to"] = r.outcome.searched_to;
    return j.dump();
  }
  char sep = f == Format::Csv ? ',' : '\t';
  std::ostringstream os;
  os << r.n << sep << outcome_label(r.outcome.kind) << sep;
  if (r.outcome.kind != SieveOutcome::Kind::Fail) os << r.outcome.k;
  os << sep << r.outcome.searched_to;
  return os.str();
}

inline CRow parse_c_row(const std::string& line, Format f) {
  CRow r;
  auto from = [&](const std::string& label, std::optional<u64> k, u64 searched) {
    r.outcome.searched_to = searched;
    if (label == "found") {
      r.outcome.kind = SieveOutcome::Kind::Found;
      r.outcome.k = *k;
    } else if (label == "upper-bound") {
      r.outcome.kind = SieveOutcome::Kind::UpperBound;
      r.outcome.k = *k;
    } else {
      r.outcome.kind = SieveOutcome::Kind::Fail;
    }
  };
  if (f == Format::Json) {
    auto j = nlohmann::json::parse(line);
    r.n = j.at("n").get<u64>();
    std::optional<u64> k;
    if (j.contains("k")) k = j["k"].get<u64>();
    from(j.at("outcome").get<std::string>(), k, j.at("searched_to").get<u64>());
    return r;
  }
  auto fields = detail::split_fields(line, f == Format::Csv ? ',' : '\t');
  if (fields.size() != 4) throw std::invalid_argument("C row needs 4 fields");
  r.n = detail::parse_u64(fields[0]);
  std::optional<u64> k;
  if (!fields[2].empty()) k = detail::parse_u64(fields[2]);
  from(fields[1], k, detail::parse_u64(fields[3]));
  return r;
}

// --- CLI argument helpers ---------------------------------------------------

inline u64 parse_magnitude(const std::string& s);

// Inclusive range "a..b"; a bare "a" means a..a. Endpoints accept the same
// magnitude spellings as parse_magnitude.
inline std::pair<u64, u64> parse_range(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos) {
    u64 v = parse_magnitude(s);
    return {v, v};
  }
  u64 a = parse_magnitude(s.substr(0, pos));
  u64 b = parse_magnitude(s.substr(pos + 2));
  if (a > b) throw std::invalid_argument("range '" + s + "' is empty");
  return {a, b};
}

// Magnitudes accept plain digits, 10^k, and scientific notation like 5e9.
inline u64 parse_magnitude(const std::string& s) {
  if (auto pos = s.find('^'); pos != std::string::npos) {
    u64 base = detail::parse_u64(s.substr(0, pos));
    u64 exp = detail::parse_u64(s.substr(pos + 1));
    u128 v = 1;
    for (u64 i = 0; i < exp; ++i) {
      v *= base;
      if (v > ~u64(0)) throw std::invalid_argument("magnitude overflows 64 bits: " + s);
    }
    return static_cast<u64>(v);
  }
  if (auto pos = s.find_first_of("eE"); pos != std::string::npos) {
    std::string mant = s.substr(0, pos);
    u64 exp = detail::parse_u64(s.substr(pos + 1));
    auto dot = mant.find('.');
    std::string digits = dot == std::string::npos ? mant : mant.substr(0, dot) + mant.substr(dot + 1);
    u64 frac = dot == std::string::npos ? 0 : mant.size() - dot - 1;
    if (frac > exp) throw std::invalid_argument("magnitude is not an integer: " + s);
    u128 v = detail::parse_u64(digits.empty() ? "0" : digits);
    for (u64 i = 0; i < exp - frac; ++i) {
      v *= 10;
      if (v > ~u64(0)) throw std::invalid_argument("magnitude overflows 64 bits: " + s);
    }
    return static_cast<u64>(v);
  }
  return detail::parse_u64(s);
}

// --- dataset verification ----------------------------------------------------

struct VerifyReport {
  std::string dataset;
  u64 checked = 0;
  u64 skipped = 0;
  std::vector<std::string> mismatches;
  bool pass() const { return mismatches.empty(); }
};

// Recompute every row of a bundled expected-value file and diff. C rows whose
// value exceeds max_c are skipped (full-scale entries are not desk work).
inline VerifyReport verify_dataset(const std::string& path, u64 max_c = 200000) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open dataset: " + path);
  VerifyReport report;
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto pos = line.find("dataset:");
      if (pos != std::string::npos) {
        std::string name = line.substr(pos + 8);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t\r") + 1);
        report.dataset = name;
      }
      continue;
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    rows.push_back(detail::split_fields(line, '\t'));
  }
  if (report.dataset.empty()) throw std::runtime_error("dataset header missing in " + path);

  auto mism = [&](u64 n, const std::string& what) {
    report.mismatches.push_back("n=" + std::to_string(n) + ": " + what);
  };
  for (const auto& f : rows) {
    u64 n = detail::parse_u64(f.at(0));
    if (report.dataset == "a") {
      if (f.size() != 6) throw std::runtime_error("bad A dataset row");
      StopRecord rec = compute_A(n);
      u64 m = triple_m_for(n);
      ++report.checked;
      if (rec.k != detail::parse_u64(f[1]))
        mism(n, "k expected " + f[1] + ", got " + std::to_string(rec.k));
      else if (rec.d != detail::parse_u64(f[2]))
        mism(n, "d expected " + f[2] + ", got " + std::to_string(rec.d));
      else if (rec.p != mpz_class(f[3]))
        mism(n, "p expected " + f[3] + ", got " + rec.p.get_str());
      else if (rec.q != mpz_class(f[4]))
        mism(n, "q expected " + f[4] + ", got " + rec.q.get_str());
      else if (m != detail::parse_u64(f[5]))
        mism(n, "m expected " + f[5] + ", got " + std::to_string(m));
    } else if (report.dataset == "b") {
      if (f.size() != 5) throw std::runtime_error("bad B dataset row");
      MultStopRecord rec = compute_B(n);
      ++report.checked;
      if (rec.k != detail::parse_u64(f[1]))
        mism(n, "k expected " + f[1] + ", got " + std::to_string(rec.k));
      else if (rec.d != detail::parse_u64(f[2]))
        mism(n, "d expected " + f[2] + ", got " + std::to_string(rec.d));
      else if (rec.p != mpz_class(f[3]))
        mism(n, "p expected " + f[3] + ", got " + rec.p.get_str());
      else if (rec.q != mpz_class(f[4]))
        mism(n, "q expected " + f[4] + ", got " + rec.q.get_str());
    } else if (report.dataset == "c") {
      if (f.size() != 2) throw std::runtime_error("bad C dataset row");
      u64 expected = detail::parse_u64(f[1]);
      if (expected > max_c) {
        ++report.skipped;
        continue;
      }
      ++report.checked;
      SieveOutcome out = compute_C_direct(n, expected);
      if (out.kind != SieveOutcome::Kind::Found)
        mism(n, "expected C=" + f[1] + ", search found nothing up to it");
      else if (out.k != expected)
        mism(n, "expected C=" + f[1] + ", got " + std::to_string(out.k));
    } else {
      throw std::runtime_error("unknown dataset kind: " + report.dataset);
    }
  }
  return report;
}

}  // namespace amc

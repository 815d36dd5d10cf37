#pragma once

// Counting, claim verification and record serialization.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fiqs/invariants.hpp"
#include "fiqs/series.hpp"

namespace fiqs {

struct CountRow {
  std::int64_t iota = 0;
  std::int64_t exact = 0;
  std::int64_t cumulative = 0;
  std::int64_t ke = 0;
  std::int64_t ke_cumulative = 0;

  friend bool operator==(const CountRow&, const CountRow&) = default;
};

struct CountTable {
  int rho = 1;
  std::vector<CountRow> rows;

  std::int64_t total() const { return rows.empty() ? 0 : rows.back().cumulative; }
  std::int64_t ke_total() const { return rows.empty() ? 0 : rows.back().ke_cumulative; }
  /// One line per row: "iota exact cumulative ke ke_cumulative".
  std::string serialize() const;
};

/// workers = 0 picks std::thread::hardware_concurrency().
CountTable count(int rho, std::int64_t iota_max, unsigned workers = 0);

/// Lines "iota cumulative"; returns the number of lines written.
std::size_t emit_plot_data(const CountTable& table, std::ostream& out);
std::size_t emit_plot_data(int rho, std::int64_t iota_max, std::ostream& out);

/// compute_invariants plus the KE flag.
SurfaceRecord make_record(const Surface& s);

enum class Format { jsonl, csv };
Format parse_format(std::string_view name);

std::string to_jsonl(const SurfaceRecord& r);
SurfaceRecord parse_jsonl(std::string_view line);

std::string csv_header();
std::string to_csv(const SurfaceRecord& r);
SurfaceRecord parse_csv(std::string_view line);

struct ExportQuery {
  int rho = 1;
  std::int64_t iota_min = 1;
  std::int64_t iota_max = 1;
  std::optional<Tag> series;
};

/// Writes records in enumeration order (csv with a header line); returns the
/// record count. Throws std::runtime_error when the stream goes bad.
std::size_t export_records(const ExportQuery& q, Format format, std::ostream& out);

enum class ClaimStatus { pass, fail, flag };
std::string_view status_name(ClaimStatus s);

struct Claim {
  std::string id;
  std::string expected;
  std::string computed;
  ClaimStatus status = ClaimStatus::pass;
};

struct VerifyReport {
  std::vector<Claim> claims;

  bool ok() const;
  std::string str() const;
};

VerifyReport verify_claims(std::int64_t iota_max, unsigned workers = 0);

// Individual consistency suites; each returns a list of failure descriptions
// over all rho and every iota up to the bound.
struct SuiteResult {
  std::int64_t checked = 0;
  std::vector<std::string> failures;
};

SuiteResult check_class_group_oracle(std::int64_t iota_max);
SuiteResult check_local_gorenstein_oracle(std::int64_t iota_max);
SuiteResult check_degree_forms(std::int64_t iota_max);
SuiteResult check_picard_forms(std::int64_t iota_max);
SuiteResult check_ke_oracle(std::int64_t iota_max);
SuiteResult check_barycenter_polygons(std::int64_t iota_max);
SuiteResult check_chain_determinants(std::int64_t iota_max);
SuiteResult check_bounds(std::int64_t iota_max);
SuiteResult check_divisibility(std::int64_t iota_max);
SuiteResult check_classify_roundtrip(std::int64_t iota_max);
SuiteResult check_enumeration_sanity(std::int64_t iota_max);
/// Every enumerated P is scrambled `per_matrix` times with up to 6 random ops.
SuiteResult check_scrambles(std::int64_t iota_max, int per_matrix, std::uint64_t seed);
SuiteResult check_orbit_maps(std::int64_t iota_max);
/// Brute-force scan over normal-form matrices with the linear-solve oracle
/// versus the series enumeration.
SuiteResult check_bruteforce_scan(std::int64_t iota_max);
SuiteResult check_ke_intro_form(std::int64_t iota_max);
SuiteResult check_record_roundtrip(std::int64_t iota_max);
/// Surfaces with eps < 2/iota (the combined lower bound of the intro).
SuiteResult check_intro_eps_bound(std::int64_t iota_max);

}  // namespace fiqs

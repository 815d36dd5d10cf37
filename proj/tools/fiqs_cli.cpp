// fiqs: enumerate, classify and count full intrinsic quadric surfaces.
//
// Exit status: 0 success, 1 usage or input error, 2 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fiqs/canon.hpp"
#include "fiqs/census.hpp"
#include "fiqs/invariants.hpp"
#include "fiqs/kaehler.hpp"
#include "fiqs/series.hpp"

namespace {

using namespace fiqs;

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(',', start);
    std::string item = text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(to_int64(parse_int(item)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

// "RHO,SERIES,IP,IM[,C[,D]]"
SeriesKey parse_eta(const std::string& text) {
  const auto comma = text.find(',');
  const auto comma2 = comma == std::string::npos ? std::string::npos : text.find(',', comma + 1);
  if (comma2 == std::string::npos) throw std::invalid_argument("--eta expects RHO,SERIES,IP,IM[,C[,D]]");
  SeriesKey key;
  key.series.rho = static_cast<int>(to_int64(parse_int(text.substr(0, comma))));
  check_rho(key.series.rho);
  key.series.tag = parse_tag(text.substr(comma + 1, comma2 - comma - 1));
  const auto nums = parse_list(text.substr(comma2 + 1));
  if (nums.size() != static_cast<std::size_t>(key.series.rho) + 1)
    throw std::invalid_argument("--eta for rho " + std::to_string(key.series.rho) + " needs " +
                                std::to_string(key.series.rho + 1) + " integers after the series");
  key.iota_plus = nums[0];
  key.iota_minus = nums[1];
  if (key.series.rho >= 2) key.c = nums[2];
  if (key.series.rho == 3) key.d = nums[3];
  return key;
}

Surface surface_from_matrix(int rho, const std::string& text) {
  RawMatrix raw{rho, parse_list(text)};
  const DefiningMatrix m = canonicalize(raw);
  return Surface{classify(m), m};
}

// Opens --out or falls back to stdout.
struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    os = &file;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Full intrinsic quadric surfaces: enumeration, invariants and census"};
  app.require_subcommand(1);

  // enumerate
  auto* en = app.add_subcommand("enumerate", "List every surface of given Picard number and Gorenstein index");
  int en_rho = 1;
  std::optional<std::int64_t> en_iota, en_iota_max;
  std::string en_series, en_format = "jsonl", en_out;
  en->add_option("--rho", en_rho, "Picard number")->required()->check(CLI::Range(1, 3));
  auto* iota_opt = en->add_option("--iota", en_iota, "single Gorenstein index")->check(CLI::PositiveNumber);
  auto* iota_max_opt = en->add_option("--iota-max", en_iota_max, "all indices up to N")->check(CLI::PositiveNumber);
  iota_opt->excludes(iota_max_opt);
  en->add_option("--series", en_series, "restrict to s11, s12, s21 or s22");
  en->add_option("--format", en_format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
  en->add_option("--out", en_out, "output file (default stdout)");

  // invariants
  auto* inv = app.add_subcommand("invariants", "Full invariant record of one surface");
  std::string inv_eta, inv_matrix, inv_format = "jsonl";
  int inv_rho = 0;
  auto* eta_opt = inv->add_option("--eta", inv_eta, "RHO,SERIES,IP,IM[,C[,D]]");
  auto* mat_opt = inv->add_option("--matrix", inv_matrix, "third row of the defining matrix, comma separated");
  inv->add_option("--rho", inv_rho, "Picard number (with --matrix)")->check(CLI::Range(1, 3));
  inv->add_option("--format", inv_format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
  eta_opt->excludes(mat_opt);

  // classify
  auto* cl = app.add_subcommand("classify", "Normal form, series and eta of a defining matrix");
  int cl_rho = 1;
  std::string cl_matrix;
  cl->add_option("--rho", cl_rho, "Picard number")->required()->check(CLI::Range(1, 3));
  cl->add_option("--matrix", cl_matrix, "third row of the defining matrix, comma separated")->required();

  // count
  auto* co = app.add_subcommand("count", "Per-index and cumulative counts");
  int co_rho = 1;
  std::int64_t co_iota_max = 1;
  unsigned co_workers = 0;
  std::string co_plot;
  co->add_option("--rho", co_rho, "Picard number")->required()->check(CLI::Range(1, 3));
  co->add_option("--iota-max", co_iota_max, "largest Gorenstein index")->required()->check(CLI::PositiveNumber);
  co->add_option("--workers", co_workers, "threads (0 = all cores)");
  co->add_option("--plot-data", co_plot, "write 'iota cumulative' lines to this file");

  // verify
  auto* ve = app.add_subcommand("verify", "Check the census claims and the consistency suites");
  std::int64_t ve_iota_max = 200;
  unsigned ve_workers = 0;
  ve->add_option("--iota-max", ve_iota_max, "largest Gorenstein index")->required()->check(CLI::PositiveNumber);
  ve->add_option("--workers", ve_workers, "threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*en) {
      if (!en_iota && !en_iota_max) throw std::invalid_argument("enumerate needs --iota or --iota-max");
      ExportQuery q;
      q.rho = en_rho;
      q.iota_min = en_iota ? *en_iota : 1;
      q.iota_max = en_iota ? *en_iota : *en_iota_max;
      if (!en_series.empty()) q.series = parse_tag(en_series);
      Sink sink(en_out);
      const auto n = export_records(q, parse_format(en_format), *sink.os);
      if (!en_out.empty()) std::cerr << n << " records written to " << en_out << '\n';
    } else if (*inv) {
      Surface s;
      if (!inv_eta.empty()) {
        const SeriesKey key = parse_eta(inv_eta);
        s = Surface{key, matrix_from_eta(key)};
      } else if (!inv_matrix.empty()) {
        if (inv_rho == 0) throw std::invalid_argument("--matrix needs --rho");
        s = surface_from_matrix(inv_rho, inv_matrix);
      } else {
        throw std::invalid_argument("invariants needs --eta or --matrix");
      }
      const SurfaceRecord r = make_record(s);
      if (parse_format(inv_format) == Format::csv)
        std::cout << csv_header() << '\n' << to_csv(r) << '\n';
      else
        std::cout << to_jsonl(r) << '\n';
    } else if (*cl) {
      const Surface s = surface_from_matrix(cl_rho, cl_matrix);
      std::cout << "normal form: " << s.matrix.str() << '\n' << "series: " << tag_name(s.key.series.tag) << '\n';
      std::cout << "eta: (" << s.key.iota_plus << ',' << s.key.iota_minus;
      if (s.key.c) std::cout << ',' << *s.key.c;
      if (s.key.d) std::cout << ',' << *s.key.d;
      std::cout << ")\n" << "gorenstein index: " << s.key.gorenstein_index() << '\n';
    } else if (*co) {
      const CountTable t = count(co_rho, co_iota_max, co_workers);
      std::cout << "# iota exact cumulative ke ke_cumulative\n" << t.serialize();
      if (!co_plot.empty()) {
        std::ofstream f(co_plot);
        if (!f) throw std::runtime_error("cannot open " + co_plot + " for writing");
        emit_plot_data(t, f);
      }
    } else if (*ve) {
      const VerifyReport rep = verify_claims(ve_iota_max, ve_workers);
      std::cout << rep.str();
      return rep.ok() ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

#include "fiqs/census.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fiqs/canon.hpp"
#include "fiqs/kaehler.hpp"
#include "json.hpp"

namespace fiqs {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Counting

std::string CountTable::serialize() const {
  std::ostringstream os;
  for (const auto& r : rows)
    os << r.iota << ' ' << r.exact << ' ' << r.cumulative << ' ' << r.ke << ' ' << r.ke_cumulative << '\n';
  return os.str();
}

namespace {

struct IotaCount {
  std::int64_t exact = 0;
  std::int64_t ke = 0;
};

IotaCount count_one(int rho, std::int64_t iota) {
  IotaCount c;
  for (Tag tag : kAllTags)
    for_each_eta(SeriesId{rho, tag}, iota, [&](const SeriesKey& key) {
      ++c.exact;
      if (is_ke_family(key)) ++c.ke;
    });
  return c;
}

}  // namespace

CountTable count(int rho, std::int64_t iota_max, unsigned workers) {
  check_rho(rho);
  if (iota_max < 1) throw std::invalid_argument("iota_max must be positive");
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const auto n = static_cast<std::size_t>(iota_max);
  std::vector<IotaCount> per(n);

  // Largest iota first: the work per index grows roughly like iota^2.
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < n;) {
      const std::size_t i = n - 1 - k;
      per[i] = count_one(rho, static_cast<std::int64_t>(i) + 1);
    }
  };
  const unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(workers, n)) - 1;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < spawn; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();

  CountTable table;
  table.rho = rho;
  std::int64_t cum = 0, ke_cum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    cum += per[i].exact;
    ke_cum += per[i].ke;
    table.rows.push_back({static_cast<std::int64_t>(i) + 1, per[i].exact, cum, per[i].ke, ke_cum});
  }
  return table;
}

std::size_t emit_plot_data(const CountTable& table, std::ostream& out) {
  for (const auto& r : table.rows) out << r.iota << ' ' << r.cumulative << '\n';
  if (!out) throw std::runtime_error("failed to write plot data");
  return table.rows.size();
}

std::size_t emit_plot_data(int rho, std::int64_t iota_max, std::ostream& out) {
  return emit_plot_data(count(rho, iota_max), out);
}

// ---------------------------------------------------------------------------
// Records

SurfaceRecord make_record(const Surface& s) {
  SurfaceRecord r = compute_invariants(s);
  r.ke = is_ke_family(s.key);
  return r;
}

Format parse_format(std::string_view name) {
  if (name == "jsonl") return Format::jsonl;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

namespace {

std::string join_weights(const std::vector<std::int64_t>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ";" : "") + std::to_string(w[i]);
  return s;
}

std::vector<std::int64_t> split_weights(std::string_view s) {
  std::vector<std::int64_t> out;
  while (!s.empty()) {
    const auto pos = s.find(';');
    out.push_back(to_int64(parse_int(s.substr(0, pos))));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = line.find(',');
    out.push_back(line.substr(0, pos));
    if (pos == std::string_view::npos) break;
    line.remove_prefix(pos + 1);
  }
  return out;
}

// Rebuilds the fields shared by both parsers.
void finish_record(SurfaceRecord& r, std::int64_t a, std::int64_t b) {
  r.matrix.rho = r.key.series.rho;
  r.matrix.a = a;
  r.matrix.b = b;
  r.matrix.c = r.key.c.value_or(0);
  r.matrix.d = r.key.d.value_or(0);
  r.local.iota_plus = r.key.iota_plus;
  r.local.iota_minus = r.key.iota_minus;
}

const std::vector<FixedPoint> kAllPoints = {FixedPoint::plus, FixedPoint::minus, FixedPoint::x0, FixedPoint::x1,
                                            FixedPoint::x2};

}  // namespace

std::string to_jsonl(const SurfaceRecord& r) {
  json j;
  j["rho"] = r.key.series.rho;
  j["series"] = std::string(tag_name(r.key.series.tag));
  j["iota_plus"] = r.key.iota_plus;
  j["iota_minus"] = r.key.iota_minus;
  j["c"] = r.key.c ? json(*r.key.c) : json(nullptr);
  j["d"] = r.key.d ? json(*r.key.d) : json(nullptr);
  j["a"] = r.matrix.a;
  j["b"] = r.matrix.b;
  j["gorenstein_index"] = r.gorenstein_index;
  j["cl_rank"] = r.class_group.free_rank;
  j["cl_torsion"] = to_int64(r.class_group.torsion_order);
  j["degree"] = r.degree.str();
  j["log_canonicity"] = r.log_canonicity.str();
  j["picard_index"] = to_int64(r.picard_index);
  j["ke"] = r.ke;
  json orders = json::object();
  for (const auto& [p, o] : r.local.orders) orders[std::string(point_key(p))] = to_int64(o);
  j["local_orders"] = orders;
  json res = json::object();
  for (const auto& [p, w] : r.resolution.chains) res[std::string(point_key(p))] = w;
  j["resolution"] = res;
  return j.dump();
}

SurfaceRecord parse_jsonl(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad record: ") + e.what());
  }
  try {
    SurfaceRecord r;
    r.key.series.rho = j.at("rho").get<int>();
    check_rho(r.key.series.rho);
    r.key.series.tag = parse_tag(j.at("series").get<std::string>());
    r.key.iota_plus = j.at("iota_plus").get<std::int64_t>();
    r.key.iota_minus = j.at("iota_minus").get<std::int64_t>();
    if (!j.at("c").is_null()) r.key.c = j.at("c").get<std::int64_t>();
    if (!j.at("d").is_null()) r.key.d = j.at("d").get<std::int64_t>();
    finish_record(r, j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>());
    r.gorenstein_index = j.at("gorenstein_index").get<std::int64_t>();
    r.class_group.free_rank = j.at("cl_rank").get<std::int64_t>();
    r.class_group.torsion_order = j.at("cl_torsion").get<std::int64_t>();
    r.degree = Rational::parse(j.at("degree").get<std::string>());
    r.log_canonicity = Rational::parse(j.at("log_canonicity").get<std::string>());
    r.picard_index = j.at("picard_index").get<std::int64_t>();
    r.ke = j.at("ke").get<bool>();
    for (const auto& [k, v] : j.at("local_orders").items()) r.local.orders[parse_point(k)] = v.get<std::int64_t>();
    for (const auto& [k, v] : j.at("resolution").items())
      r.resolution.chains[parse_point(k)] = v.get<std::vector<std::int64_t>>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad record: ") + e.what());
  }
}

std::string csv_header() {
  std::string h =
      "rho,series,iota_plus,iota_minus,c,d,a,b,gorenstein_index,cl_rank,cl_torsion,degree,log_canonicity,"
      "picard_index,ke";
  for (auto p : kAllPoints) h += ",local_" + std::string(point_key(p));
  for (auto p : kAllPoints) h += ",resolution_" + std::string(point_key(p));
  return h;
}

std::string to_csv(const SurfaceRecord& r) {
  std::ostringstream os;
  os << r.key.series.rho << ',' << tag_name(r.key.series.tag) << ',' << r.key.iota_plus << ',' << r.key.iota_minus
     << ',';
  if (r.key.c) os << *r.key.c;
  os << ',';
  if (r.key.d) os << *r.key.d;
  os << ',' << r.matrix.a << ',' << r.matrix.b << ',' << r.gorenstein_index << ',' << r.class_group.free_rank << ','
     << to_string(r.class_group.torsion_order) << ',' << r.degree.str() << ',' << r.log_canonicity.str() << ','
     << to_string(r.picard_index) << ',' << (r.ke ? "true" : "false");
  for (auto p : kAllPoints) {
    os << ',';
    if (auto it = r.local.orders.find(p); it != r.local.orders.end()) os << to_string(it->second);
  }
  for (auto p : kAllPoints) {
    os << ',';
    if (auto it = r.resolution.chains.find(p); it != r.resolution.chains.end()) os << join_weights(it->second);
  }
  return os.str();
}

SurfaceRecord parse_csv(std::string_view line) {
  const auto f = split_csv(line);
  if (f.size() != 25) throw std::invalid_argument("bad csv record: expected 25 fields");
  auto i64 = [](std::string_view s) { return to_int64(parse_int(s)); };
  SurfaceRecord r;
  r.key.series.rho = static_cast<int>(i64(f[0]));
  check_rho(r.key.series.rho);
  r.key.series.tag = parse_tag(f[1]);
  r.key.iota_plus = i64(f[2]);
  r.key.iota_minus = i64(f[3]);
  if (!f[4].empty()) r.key.c = i64(f[4]);
  if (!f[5].empty()) r.key.d = i64(f[5]);
  finish_record(r, i64(f[6]), i64(f[7]));
  r.gorenstein_index = i64(f[8]);
  r.class_group.free_rank = i64(f[9]);
  r.class_group.torsion_order = parse_int(f[10]);
  r.degree = Rational::parse(f[11]);
  r.log_canonicity = Rational::parse(f[12]);
  r.picard_index = parse_int(f[13]);
  if (f[14] != "true" && f[14] != "false") throw std::invalid_argument("bad csv record: ke must be true or false");
  r.ke = f[14] == "true";
  // Which points exist is fixed by rho; an empty resolution cell is a smooth point.
  const auto present = fixed_points(r.key.series.rho);
  for (std::size_t k = 0; k < kAllPoints.size(); ++k) {
    const bool here = std::find(present.begin(), present.end(), kAllPoints[k]) != present.end();
    if (!here) continue;
    r.local.orders[kAllPoints[k]] = parse_int(f[15 + k]);
    r.resolution.chains[kAllPoints[k]] = split_weights(f[20 + k]);
  }
  return r;
}

std::size_t export_records(const ExportQuery& q, Format format, std::ostream& out) {
  check_rho(q.rho);
  if (q.iota_min < 1 || q.iota_max < q.iota_min) throw std::invalid_argument("bad Gorenstein index range");
  std::size_t n = 0;
  if (format == Format::csv) out << csv_header() << '\n';
  auto emit = [&](const Surface& s) {
    const SurfaceRecord r = make_record(s);
    out << (format == Format::jsonl ? to_jsonl(r) : to_csv(r)) << '\n';
    ++n;
  };
  for (std::int64_t iota = q.iota_min; iota <= q.iota_max; ++iota) {
    if (q.series) {
      for_each_eta(SeriesId{q.rho, *q.series}, iota,
                   [&](const SeriesKey& key) { emit(Surface{key, matrix_from_eta_unchecked(key)}); });
    } else {
      for_each_surface(q.rho, iota, emit);
    }
    if (!out) throw std::runtime_error("failed to write records");
  }
  out.flush();
  if (!out) throw std::runtime_error("failed to write records");
  return n;
}

// ---------------------------------------------------------------------------
// Consistency suites

namespace {

template <class Fn>
SuiteResult over_surfaces(std::int64_t iota_max, Fn&& fn) {
  SuiteResult res;
  for (int rho = 1; rho <= 3; ++rho)
    for (std::int64_t iota = 1; iota <= iota_max; ++iota)
      for_each_surface(rho, iota, [&](const Surface& s) {
        ++res.checked;
        try {
          std::string why = fn(s);
          if (!why.empty()) res.failures.push_back(s.key.str() + ": " + why);
        } catch (const std::exception& e) {
          res.failures.push_back(s.key.str() + ": exception: " + e.what());
        }
      });
  return res;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

std::string bary_str(const std::vector<Barycenter>& bs) {
  std::string s;
  for (const auto& b : bs) s += "k" + std::to_string(b.kappa) + "=(" + b.x.str() + "," + b.y.str() + ")";
  return s;
}

}  // namespace

SuiteResult check_class_group_oracle(std::int64_t iota_max) {
  return over_surfaces(iota_max, [](const Surface& s) -> std::string {
    const auto f = class_group(s.matrix), o = class_group_oracle(s.matrix);
    if (f == o) return {};
    return "formula " + std::to_string(f.free_rank) + "/" + to_string(f.torsion_order) + " vs smith " +
           std::to_string(o.free_rank) + "/" + to_string(o.torsion_order);
  });
}

SuiteResult check_local_gorenstein_oracle(std::int64_t iota_max) {
  return over_surfaces(iota_max, [](const Surface& s) -> std::string {
    const auto f = local_gorenstein(s.matrix);
    const auto p = local_gorenstein_oracle(s.matrix, Side::plus);
    const auto m = local_gorenstein_oracle(s.matrix, Side::minus);
    if (f.plus == p && f.minus == m && p == s.key.iota_plus && m == s.key.iota_minus) return {};
    return "closed form (" + std::to_string(f.plus) + "," + std::to_string(f.minus) + ") vs solve (" +
           std::to_string(p) + "," + std::to_string(m) + ")";
  });
}

SuiteResult check_degree_forms(std::int64_t iota_max) {
  return over_surfaces(iota_max, [](const Surface& s) -> std::string {
    const auto x = degree(s.matrix), y = degree_from_eta(s.key);
    return x == y ? std::string() : x.str() + " vs " + y.str();
  });
}

SuiteResult check_picard_forms(std::int64_t iota_max) {
  return over_surfaces(iota_max, [](const Surface& s) -> std::string {
    const auto x = picard_index(s.matrix), y = picard_index_from_eta(s.key);
    return x == y ? std::string() : to_string(x) + " vs " + to_string(y);
  });
}

SuiteResult check_ke_oracle(std::int64_t iota_max) {
  return over_surfaces(iota_max, [](const Surface& s) -> std::string {
    const bool fam = is_ke_family(s.key), orc = is_ke_oracle(s.matrix);
    if (fam == orc) return {};
    return std::string("family ") + (fam ? "true" : "false") + " vs barycenters " + bary_str(barycenters(s.matrix));
  });
}

SuiteResult check_barycenter_polygons(std::int64_t iota_max) {
  return over_surfaces(iota_max, [](const Surface& s) -> std::string {
    const auto x = barycenters(s.matrix), y = barycenters_from_polygons(s.matrix);
    return x == y ? std::string() : bary_str(x) + " vs " + bary_str(y);
  });
}

SuiteResult check_chain_determinants(std::int64_t iota_max) {
  return over_surfaces(iota_max, [](const Surface& s) -> std::string {
    const auto g = resolution_graph(s.key);
    const auto l = local_orders(s.matrix);
    std::string bad;
    for (auto p : fixed_points(s.key.series.rho)) {
      const auto& w = g.chains.at(p);
      const Int order = l.orders.at(p);
      // empty chain <=> smooth point
      const bool ok = w.empty() ? order == 1 : chain_determinant(w) == order;
      for (auto x : w)
        if (x > -2) bad += std::string(point_key(p)) + " weight " + std::to_string(x) + " ";
      if (!ok)
        bad += std::string(point_key(p)) + " det " + to_string(chain_determinant(w)) + " order " + to_string(order) +
               " ";
    }
    return bad;
  });
}

SuiteResult check_bounds(std::int64_t iota_max) {
  return over_surfaces(iota_max, [](const Surface& s) { return join(bound_violations(compute_invariants(s))); });
}

SuiteResult check_divisibility(std::int64_t iota_max) {
  return over_surfaces(iota_max, [](const Surface& s) { return join(divisibility_violations(compute_invariants(s))); });
}

SuiteResult check_classify_roundtrip(std::int64_t iota_max) {
  return over_surfaces(iota_max, [](const Surface& s) -> std::string {
    const SeriesKey k = classify(s.matrix);
    if (!(k == s.key)) return "classified as " + k.str();
    if (!(matrix_from_eta(k) == s.matrix)) return "matrix_from_eta(classify) differs";
    return {};
  });
}

SuiteResult check_enumeration_sanity(std::int64_t iota_max) {
  SuiteResult res;
  for (int rho = 1; rho <= 3; ++rho)
    for (std::int64_t iota = 1; iota <= iota_max; ++iota) {
      std::set<DefiningMatrix> seen;
      for_each_surface(rho, iota, [&](const Surface& s) {
        ++res.checked;
        const auto v = validate(s.matrix);
        if (!v.ok()) res.failures.push_back(s.key.str() + ": " + v.str());
        if (!seen.insert(s.matrix).second) res.failures.push_back(s.key.str() + ": duplicate matrix " + s.matrix.str());
        if (s.key.gorenstein_index() != iota) res.failures.push_back(s.key.str() + ": wrong Gorenstein index");
        if (rho == 1) {
          const int pa = static_cast<int>(s.matrix.a & 1), pb = static_cast<int>(s.matrix.b & 1);
          if (make_tag(pa + 1, pb + 1) != s.key.series.tag) res.failures.push_back(s.key.str() + ": parity table");
        }
      });
    }
  return res;
}

SuiteResult check_scrambles(std::int64_t iota_max, int per_matrix, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, 6);
  SuiteResult res;
  for (int rho = 1; rho <= 3; ++rho)
    for (std::int64_t iota = 1; iota <= iota_max; ++iota)
      for_each_surface(rho, iota, [&](const Surface& s) {
        for (int k = 0; k < per_matrix; ++k) {
          ++res.checked;
          RawMatrix raw = to_raw(s.matrix);
          std::string ops;
          try {
            for (int n = len(rng); n > 0; --n) {
              const auto op = random_op(rho, rng);
              ops += op.str() + " ";
              raw = apply_op(raw, op);
            }
            const auto back = canonicalize(raw);
            if (!(back == s.matrix)) res.failures.push_back(s.key.str() + ": " + ops + "-> " + back.str());
          } catch (const std::exception& e) {
            res.failures.push_back(s.key.str() + ": " + ops + "-> exception: " + e.what());
          }
        }
      });
  return res;
}

SuiteResult check_orbit_maps(std::int64_t iota_max) {
  return over_surfaces(iota_max, [](const Surface& s) -> std::string {
    const auto& m = s.matrix;
    const auto closed = orbit_generators(m);
    std::vector<DefiningMatrix> raw;
    switch (m.rho) {
      case 1:
        // exchanging v3 and v4 fixes the normal form
        if (!(arm_swap_via_matrix(m, 1, 2) == m)) return "swap(v3,v4) moved the matrix";
        break;
      case 2: raw.push_back(arm_swap_via_matrix(m, 0, 1)); break;
      case 3:
        raw.push_back(arm_swap_via_matrix(m, 1, 2));
        raw.push_back(arm_swap_via_matrix(m, 0, 1));
        break;
    }
    raw.push_back(slope_order(reduce_raw(apply_op(to_raw(m), AdmissibleOp::negate_last_row()))));
    if (raw.size() != closed.size()) return "generator count";
    for (std::size_t i = 0; i < raw.size(); ++i)
      if (!(raw[i] == closed[i])) return "generator " + std::to_string(i) + ": " + closed[i].str() + " vs " + raw[i].str();
    return {};
  });
}

SuiteResult check_bruteforce_scan(std::int64_t iota_max) {
  SuiteResult res;
  for (int rho = 1; rho <= 3; ++rho)
    for (std::int64_t iota = 1; iota <= iota_max; ++iota) {
      std::set<DefiningMatrix> expected, found;
      for (const auto& s : enumerate_all(rho, iota)) expected.insert(s.matrix);

      // Generous window: the local orders at x+- are at most 4 iota.
      const std::int64_t w = 4 * iota;
      auto consider = [&](const DefiningMatrix& m) {
        if (!validate(m).ok()) return;
        ++res.checked;
        const auto p = local_gorenstein_oracle(m, Side::plus);
        if (iota % p != 0) return;
        const auto q = local_gorenstein_oracle(m, Side::minus);
        if (lcm2(p, q) == iota) found.insert(m);
      };
      if (rho == 1) {
        for (std::int64_t a = 0; a <= w; ++a)
          for (std::int64_t b = -w - 2; b <= -2; ++b) consider({1, a, b, 0, 0});
      } else if (rho == 2) {
        // t = b + c with -(2t + 1) <= w
        for (std::int64_t a = 0; a <= w; ++a)
          for (std::int64_t t = -(w + 1) / 2; t <= -1; ++t)
            for (std::int64_t c = -2 * w - 2; c <= -1; ++c) consider({2, a, t - c, c, 0});
      } else {
        // t = b + c + d with -t <= w; a - b >= -c and c <= d bound c below by -(a - t) / 2
        for (std::int64_t a = 1; a <= w; ++a)
          for (std::int64_t t = -w; t <= -1; ++t)
            for (std::int64_t c = -(a - t); c <= -1; ++c)
              for (std::int64_t d = std::max(c, -(a - t) - 2 * c); d <= -1; ++d) consider({3, a, t - c - d, c, d});
      }
      for (const auto& m : expected)
        if (!found.count(m))
          res.failures.push_back("rho=" + std::to_string(rho) + " iota=" + std::to_string(iota) + ": " + m.str() +
                                 " enumerated but not found by the scan");
      for (const auto& m : found)
        if (!expected.count(m))
          res.failures.push_back("rho=" + std::to_string(rho) + " iota=" + std::to_string(iota) + ": " + m.str() +
                                 " found by the scan but not enumerated");
    }
  return res;
}

SuiteResult check_ke_intro_form(std::int64_t iota_max) {
  return over_surfaces(iota_max, [](const Surface& s) -> std::string {
    return is_ke_family(s.key) == is_ke_family_intro_form(s.key) ? std::string() : "parameterizations disagree";
  });
}

SuiteResult check_record_roundtrip(std::int64_t iota_max) {
  return over_surfaces(iota_max, [](const Surface& s) -> std::string {
    const SurfaceRecord r = make_record(s);
    if (!(parse_jsonl(to_jsonl(r)) == r)) return "jsonl round trip";
    if (!(parse_csv(to_csv(r)) == r)) return "csv round trip";
    return {};
  });
}

SuiteResult check_intro_eps_bound(std::int64_t iota_max) {
  return over_surfaces(iota_max, [](const Surface& s) -> std::string {
    const Rational e = log_canonicity(s.matrix);
    const Rational lower(2, s.key.gorenstein_index());
    return lower <= e ? std::string() : "eps " + e.str() + " < 2/iota";
  });
}

// ---------------------------------------------------------------------------
// Claim registry

std::string_view status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "PASS";
    case ClaimStatus::fail: return "FAIL";
    case ClaimStatus::flag: return "FLAG";
  }
  return "?";
}

bool VerifyReport::ok() const {
  return std::none_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status == ClaimStatus::fail; });
}

std::string VerifyReport::str() const {
  std::ostringstream os;
  for (const auto& c : claims)
    os << status_name(c.status) << "  " << c.id << "  expected: " << c.expected << "  computed: " << c.computed << '\n';
  os << "overall: " << (ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

VerifyReport verify_claims(std::int64_t iota_max, unsigned workers) {
  if (iota_max < 1) throw std::invalid_argument("iota_max must be positive");
  VerifyReport rep;
  auto exact = [&](std::string id, std::int64_t expected, std::int64_t computed) {
    rep.claims.push_back({std::move(id), std::to_string(expected), std::to_string(computed),
                          expected == computed ? ClaimStatus::pass : ClaimStatus::fail});
  };

  exact("identity.total_sum", 15538339, 883 + 71198 + 15466258);

  if (iota_max >= 200) {
    const std::int64_t want[4] = {0, 883, 71198, 15466258};
    const std::int64_t want_ke[4] = {0, 150, 0, 1006633};
    std::int64_t total = 0;
    std::int64_t ke[4] = {};
    for (int rho = 1; rho <= 3; ++rho) {
      const auto t = count(rho, 200, workers);
      exact("census.rho" + std::to_string(rho), want[rho], t.total());
      total += t.total();
      ke[rho] = t.ke_total();
    }
    exact("census.total", 15538339, total);
    for (int rho = 1; rho <= 3; ++rho) exact("ke.rho" + std::to_string(rho), want_ke[rho], ke[rho]);
  }

  {
    const std::int64_t n = std::min<std::int64_t>(iota_max, 40);
    std::string bad;
    for (int rho = 1; rho <= 3; ++rho) {
      const auto t1 = count(rho, n, 1), t3 = count(rho, n, 3);
      if (t1.serialize() != t3.serialize()) bad += "rho" + std::to_string(rho) + " depends on workers ";
      std::int64_t prev = 0;
      for (const auto& r : t1.rows) {
        if (r.cumulative - prev != r.exact || r.exact < 0 || r.ke_cumulative > r.cumulative)
          bad += "rho" + std::to_string(rho) + " row " + std::to_string(r.iota) + " ";
        prev = r.cumulative;
      }
    }
    rep.claims.push_back({"count.additive_deterministic", "identical tables, prefix sums",
                          bad.empty() ? "ok" : bad, bad.empty() ? ClaimStatus::pass : ClaimStatus::fail});
  }

  auto suite = [&](const std::string& id, std::int64_t cap, SuiteResult r) {
    std::string computed = std::to_string(r.failures.size()) + " failures / " + std::to_string(r.checked) +
                           " checked (iota <= " + std::to_string(cap) + ")";
    if (!r.failures.empty()) computed += "; first: " + r.failures.front();
    rep.claims.push_back({id, "0 failures", computed, r.failures.empty() ? ClaimStatus::pass : ClaimStatus::fail});
  };
  const std::int64_t n30 = std::min<std::int64_t>(iota_max, 30);
  const std::int64_t n50 = std::min<std::int64_t>(iota_max, 50);
  const std::int64_t n20 = std::min<std::int64_t>(iota_max, 20);
  const std::int64_t n10 = std::min<std::int64_t>(iota_max, 10);

  suite("oracle.class_group", n30, check_class_group_oracle(n30));
  suite("oracle.local_gorenstein", n30, check_local_gorenstein_oracle(n30));
  suite("oracle.degree_formulas", n30, check_degree_forms(n30));
  suite("oracle.picard_formulas", n30, check_picard_forms(n30));
  suite("oracle.ke_family", n30, check_ke_oracle(n30));
  suite("oracle.barycenter_polygons", n30, check_barycenter_polygons(n30));
  suite("chain_determinant", n30, check_chain_determinants(n30));
  suite("ke.intro_parameterization", n30, check_ke_intro_form(n30));
  suite("bounds", n50, check_bounds(n50));
  suite("divisibility", n50, check_divisibility(n50));
  suite("classify.roundtrip", n50, check_classify_roundtrip(n50));
  suite("enumeration.sanity", n50, check_enumeration_sanity(n50));
  suite("canonicalize.scrambles", n20, check_scrambles(n20, 1, 20240601));
  suite("canonicalize.orbit_maps", n20, check_orbit_maps(n20));
  suite("enumeration.bruteforce_scan", n10, check_bruteforce_scan(n10));
  suite("records.roundtrip", n10, check_record_roundtrip(n10));

  {
    const auto r = check_intro_eps_bound(n50);
    std::string computed = std::to_string(r.failures.size()) + " of " + std::to_string(r.checked) +
                           " surfaces below (iota <= " + std::to_string(n50) + ")";
    if (!r.failures.empty()) computed += "; e.g. " + r.failures.front();
    rep.claims.push_back({"flag.intro_eps_lower_bound", "eps >= 2/iota on every surface", computed,
                          r.failures.empty() ? ClaimStatus::pass : ClaimStatus::flag});
  }
  return rep;
}

}  // namespace fiqs

#include "fiqs/series.hpp"

#include <sstream>
#include <stdexcept>

namespace fiqs {

std::string_view tag_name(Tag tag) {
  switch (tag) {
    case Tag::S11: return "s11";
    case Tag::S12: return "s12";
    case Tag::S21: return "s21";
    case Tag::S22: return "s22";
  }
  return "?";
}

Tag parse_tag(std::string_view name) {
  for (Tag t : kAllTags)
    if (tag_name(t) == name) return t;
  if (name.size() == 3 && (name[0] == 'S'))
    return parse_tag(std::string("s") + std::string(name.substr(1)));
  throw std::invalid_argument("unknown series '" + std::string(name) + "'");
}

Tag make_tag(int plus, int minus) {
  if (plus == 1) return minus == 1 ? Tag::S11 : Tag::S12;
  return minus == 1 ? Tag::S21 : Tag::S22;
}

void check_rho(int rho) {
  if (rho < 1 || rho > 3) throw std::invalid_argument("Picard number must be 1, 2 or 3");
}

std::int64_t SeriesKey::gorenstein_index() const {
  return to_int64(lcm2(iota_plus, iota_minus));
}

std::string SeriesKey::str() const {
  std::ostringstream os;
  os << "rho=" << series.rho << ' ' << tag_name(series.tag) << " (" << iota_plus << ',' << iota_minus;
  if (c) os << ',' << *c;
  if (d) os << ',' << *d;
  os << ')';
  return os.str();
}

std::vector<std::int64_t> DefiningMatrix::third_row() const {
  switch (rho) {
    case 1: return {a, b, 1, 1};
    case 2: return {a, b, 0, c, 1};
    case 3: return {a, b, 0, c, 0, d};
  }
  throw std::invalid_argument("Picard number must be 1, 2 or 3");
}

std::array<std::vector<std::int64_t>, 2> leading_rows(int rho) {
  switch (rho) {
    case 1: return {{{-1, -1, 2, 0}, {-1, -1, 0, 2}}};
    case 2: return {{{-1, -1, 1, 1, 0}, {-1, -1, 0, 0, 2}}};
    case 3: return {{{-1, -1, 1, 1, 0, 0}, {-1, -1, 0, 0, 1, 1}}};
  }
  throw std::invalid_argument("Picard number must be 1, 2 or 3");
}

IntMatrix DefiningMatrix::expand() const {
  auto top = leading_rows(rho);
  auto row3 = third_row();
  IntMatrix p(3, row3.size());
  for (std::size_t j = 0; j < row3.size(); ++j) {
    p(0, j) = top[0][j];
    p(1, j) = top[1][j];
    p(2, j) = row3[j];
  }
  return p;
}

std::string DefiningMatrix::str() const {
  std::ostringstream os;
  auto row = third_row();
  for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
  return os.str();
}

std::vector<std::pair<std::int64_t, std::int64_t>> divisor_pairs(std::int64_t iota) {
  if (iota < 1) throw std::invalid_argument("Gorenstein index must be positive");
  std::vector<std::int64_t> divs;
  for (std::int64_t k = 1; k * k <= iota; ++k) {
    if (iota % k != 0) continue;
    divs.push_back(k);
    if (k * k != iota) divs.push_back(iota / k);
  }
  std::sort(divs.begin(), divs.end());
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (auto p : divs)
    for (auto m : divs)
      if (lcm2(p, m) == iota) out.emplace_back(p, m);
  return out;
}

namespace {

bool odd(std::int64_t x) { return x % 2 != 0; }
bool divides(std::int64_t k, std::int64_t x) { return x % k == 0; }

// Numerator N of the rho = 2 bounds 1 - N/2 <= c <= -N/4.
std::int64_t rho2_weight(Tag tag, std::int64_t ip, std::int64_t im) {
  const std::int64_t wp = plus_kind(tag) == 1 ? ip : 3 * ip;
  const std::int64_t wm = minus_kind(tag) == 1 ? im : 3 * im;
  return wp + wm;
}

}  // namespace

bool admits_pair(SeriesId series, std::int64_t ip, std::int64_t im) {
  if (ip < 1 || im < 1) return false;
  const Tag t = series.tag;
  switch (series.rho) {
    case 1:
      switch (t) {
        case Tag::S11: return odd(ip) && odd(im) && ip <= im;
        case Tag::S12: return odd(ip) && divides(4, im) && 2 * ip <= im;
        case Tag::S21: return divides(4, ip) && odd(im) && ip <= 2 * im;
        case Tag::S22: return divides(4, ip) && divides(4, im) && ip <= im;
      }
      break;
    case 2:
      if (!odd(ip) || !odd(im)) return false;
      switch (t) {
        case Tag::S11: return !divides(3, ip) && !divides(3, im) && ip <= im;
        case Tag::S12: return !divides(3, ip) && ip <= 3 * im;
        case Tag::S21: return !divides(3, im) && 3 * ip <= im;
        case Tag::S22: return ip <= im;
      }
      break;
    case 3:
      switch (t) {
        case Tag::S11: return odd(ip) && odd(im) && ip <= im;
        case Tag::S12: return odd(ip) && ip <= 2 * im;
        case Tag::S21: return odd(im) && 2 * ip <= im;
        case Tag::S22: return ip <= im;
      }
      break;
  }
  check_rho(series.rho);
  return false;
}

std::pair<std::int64_t, std::int64_t> rho2_c_range(Tag tag, std::int64_t ip, std::int64_t im) {
  const std::int64_t n = rho2_weight(tag, ip, im);
  const Rational lower = Rational(1) - Rational(n, 2);
  const Rational upper = -Rational(n, 4);
  const std::int64_t lo = to_int64(lower.ceil());
  const std::int64_t hi = std::min<std::int64_t>(to_int64(upper.floor()), -1);
  return {lo, hi};
}

std::int64_t rho3_weight(Tag tag, std::int64_t ip, std::int64_t im) {
  const std::int64_t wp = plus_kind(tag) == 1 ? ip : 2 * ip;
  const std::int64_t wm = minus_kind(tag) == 1 ? im : 2 * im;
  return wp + wm;
}

bool in_series(const SeriesKey& key) {
  const int rho = key.series.rho;
  if (rho < 1 || rho > 3) return false;
  if (key.c.has_value() != (rho >= 2) || key.d.has_value() != (rho == 3)) return false;
  if (!admits_pair(key.series, key.iota_plus, key.iota_minus)) return false;
  if (rho == 2) {
    auto [lo, hi] = rho2_c_range(key.series.tag, key.iota_plus, key.iota_minus);
    return lo <= *key.c && *key.c <= hi;
  }
  if (rho == 3) {
    const std::int64_t n = rho3_weight(key.series.tag, key.iota_plus, key.iota_minus);
    const std::int64_t c = *key.c, d = *key.d;
    return c <= d && d <= -1 && -n <= 2 * c + d;
  }
  return true;
}

std::vector<SeriesKey> enumerate_eta(SeriesId series, std::int64_t iota) {
  std::vector<SeriesKey> out;
  for_each_eta(series, iota, [&](const SeriesKey& k) { out.push_back(k); });
  return out;
}

DefiningMatrix matrix_from_eta_unchecked(const SeriesKey& key) {
  const std::int64_t ip = key.iota_plus, im = key.iota_minus;
  const bool p1 = plus_kind(key.series.tag) == 1;
  const bool m1 = minus_kind(key.series.tag) == 1;
  DefiningMatrix m;
  m.rho = key.series.rho;
  switch (m.rho) {
    case 1:
      m.a = p1 ? ip - 1 : ip / 2 - 1;
      m.b = m1 ? -im - 1 : -im / 2 - 1;
      break;
    case 2:
      m.c = key.c.value_or(0);
      m.a = p1 ? (ip - 1) / 2 : (3 * ip - 1) / 2;
      m.b = (m1 ? -(im + 1) / 2 : -(3 * im + 1) / 2) - m.c;
      break;
    case 3:
      m.c = key.c.value_or(0);
      m.d = key.d.value_or(0);
      m.a = p1 ? ip : 2 * ip;
      m.b = (m1 ? -im : -2 * im) - m.c - m.d;
      break;
    default:
      check_rho(m.rho);
  }
  return m;
}

DefiningMatrix matrix_from_eta(const SeriesKey& key) {
  if (!in_series(key)) throw std::invalid_argument("eta " + key.str() + " is not in its series");
  return matrix_from_eta_unchecked(key);
}

std::vector<Surface> enumerate_all(int rho, std::int64_t iota) {
  std::vector<Surface> out;
  for_each_surface(rho, iota, [&](const Surface& s) { out.push_back(s); });
  return out;
}

}  // namespace fiqs

#include "fiqs/kaehler.hpp"

#include <algorithm>
#include <stdexcept>

namespace fiqs {

std::vector<int> special_kappas(int rho) {
  switch (rho) {
    case 1: return {1, 2};
    case 2: return {2};
    case 3: return {0, 1, 2};
  }
  check_rho(rho);
  return {};
}

std::vector<Barycenter> barycenters(const DefiningMatrix& m) {
  const Int a = m.a, b = m.b, c = m.c, d = m.d;
  std::vector<Barycenter> out;
  switch (m.rho) {
    case 1: {
      const Int q = checked_mul(1 + a, 1 + b);
      const Rational x(-(2 + a + b), checked_mul(3, q));
      const Rational y(checked_sub(checked_mul(a, b), 1), checked_mul(6, q));
      for (int k : special_kappas(1)) out.push_back({k, x, y});
      break;
    }
    case 2: {
      const Int q = checked_mul(2 * a + 1, 2 * b + 2 * c + 1);
      const Int s = a + b + c + 1;
      out.push_back({2, Rational(-2 * s, q), Rational(-s, q)});
      break;
    }
    case 3: {
      const Int t = b + c + d;
      const Rational x(-2 * (a + t), checked_mul(3 * a, t));
      const Int den = checked_mul(3 * (a - t), t);
      const Int y0 = checked_add(checked_mul(b + 2 * c + 2 * d - a, b), checked_mul(c + a + d, c + d));
      const Int y1 = checked_add(
          checked_sub(checked_mul(a - b - 2 * c - 2 * d, b), checked_mul(a + c + 2 * d, c)), checked_mul(a - d, d));
      // y1 with c and d exchanged
      const Int y2 = checked_sub(
          checked_add(checked_mul(a - b - 2 * c - 2 * d, b), checked_mul(a - c - 2 * d, c)), checked_mul(a + d, d));
      out.push_back({0, x, Rational(y0, den)});
      out.push_back({1, x, Rational(y1, den)});
      out.push_back({2, x, Rational(y2, den)});
      break;
    }
    default:
      check_rho(m.rho);
  }
  return out;
}

bool is_ke_oracle(const DefiningMatrix& m) {
  for (const auto& bc : barycenters(m))
    if (bc.x.sign() != 0 || bc.y.sign() <= 0) return false;
  return true;
}

bool is_ke_family(const SeriesKey& key) {
  if (!in_series(key)) throw std::invalid_argument("is_ke_family: " + key.str() + " is not in its series");
  const Tag t = key.series.tag;
  if (key.iota_plus != key.iota_minus || (t != Tag::S11 && t != Tag::S22)) return false;
  switch (key.series.rho) {
    case 1: return true;
    case 2: return false;
    default: {
      const std::int64_t j = t == Tag::S11 ? key.iota_plus : 2 * key.iota_plus;
      const std::int64_t c = *key.c, d = *key.d;
      return -2 * j <= 2 * c + d && c <= d && d <= -1 && c + d <= -j - 1;
    }
  }
}

bool is_ke_family_intro_form(const SeriesKey& key) {
  if (key.series.rho != 3) return is_ke_family(key);
  if (!in_series(key)) throw std::invalid_argument("is_ke_family_intro_form: " + key.str() + " is not in its series");
  const Tag t = key.series.tag;
  if (key.iota_plus != key.iota_minus || (t != Tag::S11 && t != Tag::S22)) return false;
  const std::int64_t j = t == Tag::S11 ? key.iota_plus : 2 * key.iota_plus;
  const std::int64_t c = *key.c, d = *key.d;
  return -j + 1 <= c && c <= -2 && std::max(c, -2 * j - 2 * c) <= d && d <= -j - 1 - c;
}

// ---------------------------------------------------------------------------
// Polygons

namespace {

Rational cross(const Point& o, const Point& p, const Point& q) {
  return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
}

Point pt(Int x, Int y) { return {Rational(x), Rational(y)}; }

}  // namespace

Polygon fano_polygon(const DefiningMatrix& m, int kappa) {
  const Int a = m.a, b = m.b, c = m.c, d = m.d;
  const auto sk = special_kappas(m.rho);
  if (std::find(sk.begin(), sk.end(), kappa) == sk.end())
    throw std::invalid_argument("fano_polygon: kappa " + std::to_string(kappa) + " is not special");
  switch (m.rho) {
    case 1: return convex_hull({pt(1, -2), pt(1 + 2 * a, 2), pt(1 + 2 * b, 2)});
    case 2: return convex_hull({pt(1, -2), pt(a, 1), pt(b + c, 1)});
    default:
      switch (kappa) {
        case 0: return convex_hull({pt(0, 1), pt(c + d, 1), pt(b, -1), pt(a, -1)});
        case 1: return convex_hull({pt(a, 1), pt(b + d, 1), pt(c, -1), pt(0, -1)});
        default: return convex_hull({pt(a, 1), pt(b + c, 1), pt(d, -1), pt(0, -1)});
      }
  }
}

Polygon convex_hull(Polygon pts) {
  auto less = [](const Point& p, const Point& q) { return p.x < q.x || (p.x == q.x && p.y < q.y); };
  std::sort(pts.begin(), pts.end(), less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  Polygon hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

Polygon dual_polygon(const Polygon& p) {
  if (p.size() < 3) throw std::invalid_argument("dual_polygon: degenerate polygon");
  Polygon out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& u = p[i];
    const Point& v = p[(i + 1) % p.size()];
    const Rational det = u.x * v.y - u.y * v.x;
    // det > 0 for every counterclockwise edge iff the origin is interior
    if (det.sign() <= 0) throw std::invalid_argument("dual_polygon: origin not in the interior");
    out.push_back({(u.y - v.y) / det, (v.x - u.x) / det});
  }
  return out;
}

Point polygon_centroid(const Polygon& p) {
  if (p.size() < 3) throw std::invalid_argument("polygon_centroid: degenerate polygon");
  Rational area2, cx, cy;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& u = p[i];
    const Point& v = p[(i + 1) % p.size()];
    const Rational w = u.x * v.y - v.x * u.y;
    area2 += w;
    cx += (u.x + v.x) * w;
    cy += (u.y + v.y) * w;
  }
  const Rational six_area = area2 * Rational(3);
  return {cx / six_area, cy / six_area};
}

std::vector<Barycenter> barycenters_from_polygons(const DefiningMatrix& m) {
  std::vector<Barycenter> out;
  for (int k : special_kappas(m.rho)) {
    const Point c = polygon_centroid(dual_polygon(fano_polygon(m, k)));
    out.push_back({k, c.x, c.y});
  }
  return out;
}

}  // namespace fiqs

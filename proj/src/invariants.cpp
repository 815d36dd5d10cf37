#include "fiqs/invariants.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace fiqs {

namespace {

Int mul(Int x, Int y) { return checked_mul(x, y); }
Int mul(Int x, Int y, Int z) { return checked_mul(checked_mul(x, y), z); }
Int sub(Int x, Int y) { return checked_sub(x, y); }

Int exact_div(Int num, Int den) {
  if (den == 0 || num % den != 0) throw std::logic_error("inexact division");
  return num / den;
}

}  // namespace

std::string_view point_key(FixedPoint p) {
  switch (p) {
    case FixedPoint::plus: return "x+";
    case FixedPoint::minus: return "x-";
    case FixedPoint::x0: return "x0";
    case FixedPoint::x1: return "x1";
    case FixedPoint::x2: return "x2";
  }
  return "?";
}

FixedPoint parse_point(std::string_view key) {
  for (auto p : {FixedPoint::plus, FixedPoint::minus, FixedPoint::x0, FixedPoint::x1, FixedPoint::x2})
    if (point_key(p) == key) return p;
  throw std::invalid_argument("unknown fixed point '" + std::string(key) + "'");
}

std::vector<FixedPoint> fixed_points(int rho) {
  check_rho(rho);
  std::vector<FixedPoint> out{FixedPoint::plus, FixedPoint::minus, FixedPoint::x0};
  if (rho >= 2) out.push_back(FixedPoint::x1);
  if (rho == 3) out.push_back(FixedPoint::x2);
  return out;
}

// ---------------------------------------------------------------------------
// Class groups

ClassGroup class_group(const DefiningMatrix& m) {
  const Int a = m.a, b = m.b, c = m.c, d = m.d;
  switch (m.rho) {
    case 1: return {1, mul(2, gcd_list({mul(2, a) + 2, a - b}))};
    case 2: return {2, gcd_list({mul(2, a) + 1, a - b, -c})};
    case 3: return {3, gcd_list({a, b, c, d})};
  }
  check_rho(m.rho);
  return {};
}

ClassGroup class_group_oracle(const DefiningMatrix& m) {
  const IntMatrix pt = m.expand().transpose();
  const SmithForm s = smith_normal_form(pt);
  ClassGroup g;
  g.free_rank = static_cast<std::int64_t>(pt.rows() - s.rank);
  g.torsion_order = 1;
  for (Int f : s.invariant_factors)
    if (f != 0) g.torsion_order = mul(g.torsion_order, f);
  return g;
}

LocalData local_orders(const DefiningMatrix& m) {
  const Int a = m.a, b = m.b, c = m.c, d = m.d;
  LocalData l;
  auto& o = l.orders;
  switch (m.rho) {
    case 1:
      o[FixedPoint::plus] = mul(4, a) + 4;
      o[FixedPoint::minus] = mul(-4, b) - 4;
      o[FixedPoint::x0] = a - b;
      break;
    case 2:
      o[FixedPoint::plus] = 1 + mul(2, a);
      o[FixedPoint::minus] = -1 - mul(2, b) - mul(2, c);
      o[FixedPoint::x0] = a - b;
      o[FixedPoint::x1] = -c;
      break;
    case 3:
      o[FixedPoint::plus] = a;
      o[FixedPoint::minus] = -(b + c + d);
      o[FixedPoint::x0] = a - b;
      o[FixedPoint::x1] = -c;
      o[FixedPoint::x2] = -d;
      break;
    default:
      check_rho(m.rho);
  }
  return l;
}

// ---------------------------------------------------------------------------
// Local Gorenstein indices

LocalGorenstein local_gorenstein(const DefiningMatrix& m) {
  const std::int64_t a = m.a, b = m.b, c = m.c, d = m.d;
  LocalGorenstein g;
  switch (m.rho) {
    case 1:
      g.plus = a % 2 == 0 ? a + 1 : 2 * a + 2;
      g.minus = b % 2 == 0 ? -b - 1 : -2 * b - 2;
      break;
    case 2: {
      const std::int64_t p = 2 * a + 1, s = -(2 * b + 2 * c + 1);
      g.plus = p % 3 == 0 ? p / 3 : p;
      g.minus = s % 3 == 0 ? s / 3 : s;
      break;
    }
    case 3: {
      const std::int64_t s = -(b + c + d);
      g.plus = a % 2 == 0 ? a / 2 : a;
      g.minus = s % 2 == 0 ? s / 2 : s;
      break;
    }
    default:
      check_rho(m.rho);
  }
  return g;
}

std::int64_t local_gorenstein_oracle(const DefiningMatrix& m, Side side) {
  check_rho(m.rho);
  static const std::size_t kPlus[4][3] = {{}, {0, 2, 3}, {0, 2, 4}, {0, 2, 4}};
  static const std::size_t kMinus[4][3] = {{}, {1, 2, 3}, {1, 3, 4}, {1, 3, 5}};
  const auto& cols = side == Side::plus ? kPlus[m.rho] : kMinus[m.rho];
  const IntMatrix p = m.expand();
  IntMatrix rays(3, 3);
  std::array<Int, 3> rhs{};
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t r = 0; r < 3; ++r) rays(r, k) = p(r, cols[k]);
    // anticanonical divisor: sum of all D_i except D_1, D_2
    rhs[k] = cols[k] >= 2 ? 1 : 0;
  }
  Int l = 1;
  for (const Rational& u : solve3(rays, rhs)) l = lcm2(l, u.den());
  return to_int64(l);
}

// ---------------------------------------------------------------------------
// Degree, log canonicity, Picard index

Rational degree(const DefiningMatrix& m) {
  const Int a = m.a, b = m.b, c = m.c, d = m.d;
  switch (m.rho) {
    case 1: return Rational(1, a + 1) - Rational(1, b + 1);
    case 2: return Rational(9, 4 * a + 2) - Rational(9, 2 + 4 * b + 4 * c);
    case 3: return Rational(4, a) - Rational(4, b + c + d);
  }
  check_rho(m.rho);
  return {};
}

Rational degree_from_eta(const SeriesKey& key) {
  const Int ip = key.iota_plus, im = key.iota_minus;
  const bool p1 = plus_kind(key.series.tag) == 1, m1 = minus_kind(key.series.tag) == 1;
  switch (key.series.rho) {
    case 1: return Rational(p1 ? 1 : 2, ip) + Rational(m1 ? 1 : 2, im);
    case 2: return Rational(p1 ? 9 : 3, 2 * ip) + Rational(m1 ? 9 : 3, 2 * im);
    case 3: return Rational(p1 ? 4 : 2, ip) + Rational(m1 ? 4 : 2, im);
  }
  check_rho(key.series.rho);
  return {};
}

Rational log_canonicity(const DefiningMatrix& m) {
  const Int a = m.a, b = m.b, c = m.c, d = m.d;
  Rational e_plus, e_minus;
  switch (m.rho) {
    case 1:
      e_plus = Rational(1, a + 1);
      e_minus = Rational(1, -b - 1);
      break;
    case 2:
      e_plus = Rational(3, 2 * a + 1);
      e_minus = Rational(-3, 2 * b + 2 * c + 1);
      break;
    case 3:
      e_plus = Rational(2, a);
      e_minus = Rational(-2, b + c + d);
      break;
    default:
      check_rho(m.rho);
  }
  return std::min(e_plus, e_minus);
}

Int picard_index(const DefiningMatrix& m) {
  const Int a = m.a, b = m.b, c = m.c, d = m.d;
  switch (m.rho) {
    case 1: {
      const Int num = mul(mul(-8, a + 1, b + 1), a - b);
      return exact_div(num, gcd_list({2 * a + 2, a - b}));
    }
    case 2: {
      const Int num = mul(mul(c, 1 + 2 * a, 1 + 2 * b + 2 * c), a - b);
      return exact_div(num, gcd_list({1 + 2 * a, a - b, c}));
    }
    case 3: {
      const Int num = mul(mul(-a, c, d), mul(b + c + d, a - b));
      return exact_div(num, gcd_list({a, b, c, d}));
    }
  }
  check_rho(m.rho);
  return 0;
}

Int picard_index_from_eta(const SeriesKey& key) {
  const Int p = key.iota_plus, q = key.iota_minus;
  const Int c = key.c.value_or(0), d = key.d.value_or(0);
  const Tag t = key.series.tag;
  switch (key.series.rho) {
    case 1: {
      // 8 S11, 4 S12 / S21, 2 S22 times ip * im * (weighted sum) / gcd
      switch (t) {
        case Tag::S11: return exact_div(mul(8 * p, q, p + q), gcd2(2 * p, p + q));
        case Tag::S12: return exact_div(mul(4 * p, q, 2 * p + q), gcd2(4 * p, 2 * p + q));
        case Tag::S21: return exact_div(mul(4 * p, q, p + 2 * q), gcd2(2 * p, p + 2 * q));
        case Tag::S22: return exact_div(mul(2 * p, q, p + q), gcd2(2 * p, p + q));
      }
      break;
    }
    case 2: {
      Int f = 1, s = 0, g = 0;
      switch (t) {
        case Tag::S11: f = 1; s = p + q; g = gcd_list({2 * p, s, 2 * c}); break;
        case Tag::S12: f = 3; s = p + 3 * q; g = gcd_list({2 * p, s, 2 * c}); break;
        case Tag::S21: f = 3; s = 3 * p + q; g = gcd_list({6 * p, s, 2 * c}); break;
        case Tag::S22: f = 9; s = 3 * p + 3 * q; g = gcd_list({6 * p, s, 2 * c}); break;
      }
      return exact_div(mul(mul(-f, c, p), mul(q, s + 2 * c)), g);
    }
    case 3: {
      Int f = 1, s = 0, g = 0;
      switch (t) {
        case Tag::S11: f = 1; s = p + q; g = gcd_list({p, q, c, d}); break;
        case Tag::S12: f = 2; s = p + 2 * q; g = gcd_list({p, 2 * q, c, d}); break;
        case Tag::S21: f = 2; s = 2 * p + q; g = gcd_list({2 * p, q, c, d}); break;
        case Tag::S22: f = 4; s = 2 * p + 2 * q; g = gcd_list({2 * p, 2 * q, c, d}); break;
      }
      return exact_div(mul(mul(f, c, d), mul(p, q, s + c + d)), g);
    }
  }
  check_rho(key.series.rho);
  return 0;
}

// ---------------------------------------------------------------------------
// Resolution graphs

ResolutionGraph resolution_graph(const SeriesKey& key) {
  if (!in_series(key)) throw std::invalid_argument("resolution_graph: " + key.str() + " is not in its series");
  const int rho = key.series.rho;
  const Tag t = key.series.tag;
  const std::int64_t ip = key.iota_plus, im = key.iota_minus;
  const std::int64_t c = key.c.value_or(0), d = key.d.value_or(0);
  const bool p1 = plus_kind(t) == 1, m1 = minus_kind(t) == 1;

  auto chain = [](std::int64_t length) { return std::vector<std::int64_t>(static_cast<std::size_t>(length), -2); };

  // Chain over x+ or x-; empty when the point is smooth.
  auto elliptic = [&](std::int64_t iota, bool kind1) -> std::vector<std::int64_t> {
    switch (rho) {
      case 1: return {-2, kind1 ? -1 - iota : -1 - iota / 2, -2};
      case 2:
        if (kind1 && iota == 1) return {};
        return {-2, kind1 ? -(1 + iota) / 2 : -(1 + 3 * iota) / 2};
      default:
        if (kind1 && iota == 1) return {};
        return {kind1 ? -iota : -2 * iota};
    }
  };

  // x0 chain length offset per series: 0, im, ip, ip + im.
  const std::int64_t offset = (p1 ? 0 : ip) + (m1 ? 0 : im);

  ResolutionGraph g;
  g.chains[FixedPoint::plus] = elliptic(ip, p1);
  g.chains[FixedPoint::minus] = elliptic(im, m1);
  switch (rho) {
    case 1: {
      const std::int64_t wp = p1 ? ip : ip / 2, wm = m1 ? im : im / 2;
      g.chains[FixedPoint::x0] = chain(wp + wm - 1);
      break;
    }
    case 2:
      g.chains[FixedPoint::x0] = chain((ip + im) / 2 + c - 1 + offset);
      g.chains[FixedPoint::x1] = chain(-1 - c);
      break;
    case 3:
      g.chains[FixedPoint::x0] = chain(ip + im + c + d - 1 + offset);
      g.chains[FixedPoint::x1] = chain(-1 - c);
      g.chains[FixedPoint::x2] = chain(-1 - d);
      break;
  }
  return g;
}

Int chain_determinant(const std::vector<std::int64_t>& weights) {
  Int prev = 0, cur = 1;
  for (std::int64_t w : weights) {
    const Int next = sub(mul(-w, cur), prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

SurfaceRecord compute_invariants(const Surface& s) {
  SurfaceRecord r;
  r.key = s.key;
  r.matrix = s.matrix;
  r.class_group = class_group(s.matrix);
  r.local = local_orders(s.matrix);
  const auto g = local_gorenstein(s.matrix);
  r.local.iota_plus = g.plus;
  r.local.iota_minus = g.minus;
  r.gorenstein_index = to_int64(lcm2(g.plus, g.minus));
  r.degree = degree(s.matrix);
  r.log_canonicity = log_canonicity(s.matrix);
  r.picard_index = picard_index(s.matrix);
  r.resolution = resolution_graph(s.key);
  return r;
}

// ---------------------------------------------------------------------------
// Bounds

std::vector<std::string> bound_violations(const SurfaceRecord& r) {
  std::vector<std::string> out;
  const Int i = r.gorenstein_index;
  const Rational& k2 = r.degree;
  const Rational& e = r.log_canonicity;
  const Int p = r.picard_index;
  auto need = [&](bool cond, const char* what) {
    if (!cond) out.emplace_back(what);
  };
  const Rational eps_sq_iota = e * e * Rational(i);
  switch (r.matrix.rho) {
    case 1:
      need(Rational(2, i) <= k2, "2/iota <= K^2");
      need(k2 <= Rational(1) + Rational(4, i), "K^2 <= 1+4/iota");
      need(eps_sq_iota <= Rational(4), "eps^2 iota <= 4");
      need(p <= mul(8, i, i), "picard <= 8 iota^2");
      break;
    case 2:
      need(Rational(3, i) <= k2, "3/iota <= K^2");
      need(k2 <= Rational(9, 2) + Rational(9, 2 * i), "K^2 <= 9/2+9/(2 iota)");
      need(eps_sq_iota <= Rational(9), "eps^2 iota <= 9");
      // 2p <= 27 iota^3 (3 iota - 1)
      need(mul(2, p) <= mul(mul(27, i, i), mul(i, 3 * i - 1)), "picard <= 27/2 iota^3 (3 iota-1)");
      break;
    case 3:
      need(Rational(4, i) <= k2, "4/iota <= K^2");
      need(k2 <= Rational(4) + Rational(4, i), "K^2 <= 4+4/iota");
      need(eps_sq_iota <= Rational(4), "eps^2 iota <= 4");
      need(p <= mul(mul(2, i, i), mul(4 * i - 1, 4 * i - 1, 2 * i - 1)), "picard <= 2 iota^2 (4 iota-1)^2 (2 iota-1)");
      break;
  }
  need(Rational(1, i) <= e, "1/iota <= eps");
  need(i <= p, "iota <= picard");
  return out;
}

std::vector<std::string> divisibility_violations(const SurfaceRecord& r) {
  std::vector<std::string> out;
  auto need = [&](bool cond, const char* what) {
    if (!cond) out.emplace_back(what);
  };
  need(r.gorenstein_index == lcm2(r.key.iota_plus, r.key.iota_minus), "iota = lcm(iota+, iota-)");
  need(r.local.iota_plus == r.key.iota_plus && r.local.iota_minus == r.key.iota_minus, "local indices match eta");
  need(r.local.orders.at(FixedPoint::plus) % r.local.iota_plus == 0, "iota+ | cl(X,x+)");
  need(r.local.orders.at(FixedPoint::minus) % r.local.iota_minus == 0, "iota- | cl(X,x-)");
  need(r.picard_index % r.gorenstein_index == 0, "iota | picard");
  need(r.degree.sign() > 0, "K^2 > 0");
  need(r.log_canonicity.sign() > 0 && r.log_canonicity <= Rational(1), "0 < eps <= 1");
  return out;
}

}  // namespace fiqs

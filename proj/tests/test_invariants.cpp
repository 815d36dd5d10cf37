#include <gtest/gtest.h>

#include "fiqs/invariants.hpp"

using namespace fiqs;

namespace {

const DefiningMatrix kR1{1, 0, -2, 0, 0};
const DefiningMatrix kR2{2, 1, 0, -2, 0};
const DefiningMatrix kR3{3, 3, 1, -2, -2};

SeriesKey key(int rho, Tag t, std::int64_t ip, std::int64_t im, std::optional<std::int64_t> c = std::nullopt,
              std::optional<std::int64_t> d = std::nullopt) {
  return SeriesKey{SeriesId{rho, t}, ip, im, c, d};
}

using Chain = std::vector<std::int64_t>;

}  // namespace

TEST(ClassGroup, Examples) {
  EXPECT_EQ(class_group(kR1), (ClassGroup{1, 4}));
  EXPECT_EQ(class_group(kR2), (ClassGroup{2, 1}));
  EXPECT_EQ(class_group(kR3), (ClassGroup{3, 1}));
  EXPECT_EQ(class_group_oracle(kR1), (ClassGroup{1, 4}));
  EXPECT_EQ(class_group_oracle(kR2), (ClassGroup{2, 1}));
  EXPECT_EQ(class_group_oracle(kR3), (ClassGroup{3, 1}));
}

TEST(ClassGroup, OracleAgreesWithTorsion) {
  // rho=3 with gcd(a,b,c,d) = 2
  const DefiningMatrix m{3, 4, -2, -2, -2};
  EXPECT_EQ(class_group(m), (ClassGroup{3, 2}));
  EXPECT_EQ(class_group_oracle(m), class_group(m));
}

TEST(LocalOrders, Examples) {
  auto o = local_orders(kR1).orders;
  EXPECT_EQ(o.size(), 3u);
  EXPECT_EQ(o[FixedPoint::plus], 4);
  EXPECT_EQ(o[FixedPoint::minus], 4);
  EXPECT_EQ(o[FixedPoint::x0], 2);

  o = local_orders(kR2).orders;
  EXPECT_EQ(o[FixedPoint::plus], 3);
  EXPECT_EQ(o[FixedPoint::minus], 3);
  EXPECT_EQ(o[FixedPoint::x0], 1);
  EXPECT_EQ(o[FixedPoint::x1], 2);

  o = local_orders(kR3).orders;
  EXPECT_EQ(o[FixedPoint::plus], 3);
  EXPECT_EQ(o[FixedPoint::minus], 3);
  EXPECT_EQ(o[FixedPoint::x0], 2);
  EXPECT_EQ(o[FixedPoint::x1], 2);
  EXPECT_EQ(o[FixedPoint::x2], 2);
}

TEST(LocalOrders, MatchDeterminants) {
  // cl(X, x+) = |det[v1, v3, v4]| for rho=1
  for (const auto& s : enumerate_all(1, 15)) {
    const IntMatrix p = s.matrix.expand();
    const IntMatrix sub = IntMatrix{{p(0, 0), p(0, 2), p(0, 3)}, {p(1, 0), p(1, 2), p(1, 3)}, {p(2, 0), p(2, 2), p(2, 3)}};
    EXPECT_EQ(abs_value(det3(sub)), local_orders(s.matrix).orders.at(FixedPoint::plus));
  }
}

TEST(LocalGorenstein, Examples) {
  EXPECT_EQ(local_gorenstein(kR1), (LocalGorenstein{1, 1}));
  EXPECT_EQ(local_gorenstein(kR2), (LocalGorenstein{1, 1}));
  EXPECT_EQ(local_gorenstein(kR3), (LocalGorenstein{3, 3}));
  EXPECT_EQ(local_gorenstein_oracle(kR1, Side::plus), 1);
  EXPECT_EQ(local_gorenstein_oracle({1, 1, -3, 0, 0}, Side::plus), 4);
  EXPECT_EQ(local_gorenstein_oracle(kR3, Side::minus), 3);
}

TEST(Degree, Examples) {
  EXPECT_EQ(degree(kR1), Rational(2));
  EXPECT_EQ(degree(kR2), Rational(3));
  EXPECT_EQ(degree(kR3), Rational(8, 3));
  EXPECT_EQ(degree_from_eta(key(1, Tag::S11, 1, 3)), Rational(4, 3));
  EXPECT_EQ(degree_from_eta(key(2, Tag::S12, 1, 1, -1)), Rational(6));
  EXPECT_EQ(degree_from_eta(key(3, Tag::S22, 1, 1, -1, -1)), Rational(4));
}

TEST(LogCanonicity, Examples) {
  EXPECT_EQ(log_canonicity(kR1), Rational(1));
  EXPECT_EQ(log_canonicity(kR2), Rational(1));
  EXPECT_EQ(log_canonicity(kR3), Rational(2, 3));
}

TEST(PicardIndex, Examples) {
  EXPECT_EQ(picard_index(kR1), 8);
  EXPECT_EQ(picard_index(kR2), 18);
  EXPECT_EQ(picard_index(kR3), 72);
  EXPECT_EQ(picard_index_from_eta(key(1, Tag::S11, 1, 1)), 8);
  EXPECT_EQ(picard_index_from_eta(key(2, Tag::S22, 1, 1, -2)), 18);
  EXPECT_EQ(picard_index_from_eta(key(3, Tag::S11, 3, 3, -2, -2)), 72);
}

TEST(Resolution, Examples) {
  auto g = resolution_graph(key(1, Tag::S11, 1, 3));
  EXPECT_EQ(g.chains[FixedPoint::plus], (Chain{-2, -2, -2}));
  EXPECT_EQ(g.chains[FixedPoint::minus], (Chain{-2, -4, -2}));
  EXPECT_EQ(g.chains[FixedPoint::x0], (Chain{-2, -2, -2}));

  g = resolution_graph(key(2, Tag::S22, 1, 1, -2));
  EXPECT_EQ(g.chains[FixedPoint::plus], (Chain{-2, -2}));
  EXPECT_EQ(g.chains[FixedPoint::minus], (Chain{-2, -2}));
  EXPECT_EQ(g.chains[FixedPoint::x0], Chain{});
  EXPECT_EQ(g.chains[FixedPoint::x1], (Chain{-2}));

  g = resolution_graph(key(3, Tag::S11, 1, 5, -2, -2));
  EXPECT_EQ(g.chains[FixedPoint::plus], Chain{});
  EXPECT_EQ(g.chains[FixedPoint::minus], (Chain{-5}));

  EXPECT_THROW(resolution_graph(key(1, Tag::S11, 2, 2)), std::invalid_argument);
}

TEST(Resolution, ChainDeterminant) {
  EXPECT_EQ(chain_determinant({}), 1);
  EXPECT_EQ(chain_determinant({-2}), 2);
  EXPECT_EQ(chain_determinant({-2, -2, -2}), 4);
  // [-2, -(1 + ip), -2] has determinant 4 ip
  for (std::int64_t ip = 1; ip < 20; ++ip) EXPECT_EQ(chain_determinant({-2, -1 - ip, -2}), 4 * ip);
}

TEST(Resolution, DeterminantsMatchLocalOrders) {
  for (int rho = 1; rho <= 3; ++rho)
    for (std::int64_t iota = 1; iota <= 20; ++iota)
      for (const auto& s : enumerate_all(rho, iota)) {
        const auto g = resolution_graph(s.key);
        const auto l = local_orders(s.matrix);
        for (auto p : fixed_points(rho)) {
          const auto& w = g.chains.at(p);
          for (auto x : w) EXPECT_LE(x, -2);
          if (w.empty())
            EXPECT_EQ(l.orders.at(p), 1) << s.key.str() << ' ' << point_key(p);
          else
            EXPECT_EQ(chain_determinant(w), l.orders.at(p)) << s.key.str() << ' ' << point_key(p);
        }
      }
}

TEST(Record, Invariants) {
  const auto r = compute_invariants(Surface{key(3, Tag::S11, 3, 3, -2, -2), kR3});
  EXPECT_EQ(r.gorenstein_index, 3);
  EXPECT_EQ(r.local.iota_plus, 3);
  EXPECT_TRUE(bound_violations(r).empty());
  EXPECT_TRUE(divisibility_violations(r).empty());
}

TEST(Record, BoundsAndDivisibility) {
  for (int rho = 1; rho <= 3; ++rho)
    for (std::int64_t iota = 1; iota <= 25; ++iota)
      for (const auto& s : enumerate_all(rho, iota)) {
        const auto r = compute_invariants(s);
        EXPECT_TRUE(bound_violations(r).empty()) << s.key.str();
        EXPECT_TRUE(divisibility_violations(r).empty()) << s.key.str();
      }
}

TEST(Points, Keys) {
  for (auto p : fixed_points(3)) EXPECT_EQ(parse_point(point_key(p)), p);
  EXPECT_EQ(fixed_points(1).size(), 3u);
  EXPECT_THROW(parse_point("x3"), std::invalid_argument);
}

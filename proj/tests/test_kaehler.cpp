#include <gtest/gtest.h>

#include "fiqs/kaehler.hpp"

using namespace fiqs;

namespace {

SeriesKey key(int rho, Tag t, std::int64_t ip, std::int64_t im, std::optional<std::int64_t> c = std::nullopt,
              std::optional<std::int64_t> d = std::nullopt) {
  return SeriesKey{SeriesId{rho, t}, ip, im, c, d};
}

}  // namespace

TEST(Barycenters, Rho1) {
  const auto b = barycenters({1, 0, -2, 0, 0});
  ASSERT_EQ(b.size(), 2u);
  for (const auto& x : b) {
    EXPECT_EQ(x.x, Rational(0));
    EXPECT_EQ(x.y, Rational(1, 6));
  }
  EXPECT_EQ(barycenters({1, 0, -4, 0, 0})[0].x, Rational(-2, 9));
}

TEST(Barycenters, Rho3) {
  const auto b = barycenters({3, 3, 1, -2, -2});
  ASSERT_EQ(b.size(), 3u);
  for (const auto& x : b) {
    EXPECT_EQ(x.x, Rational(0));
    EXPECT_EQ(x.y, Rational(1, 9));
  }
}

TEST(KeOracle, Examples) {
  EXPECT_TRUE(is_ke_oracle({1, 0, -2, 0, 0}));
  EXPECT_FALSE(is_ke_oracle({1, 0, -4, 0, 0}));
  EXPECT_TRUE(is_ke_oracle({3, 3, 1, -2, -2}));
  for (std::int64_t iota = 1; iota <= 15; ++iota)
    for (const auto& s : enumerate_all(2, iota)) EXPECT_FALSE(is_ke_oracle(s.matrix)) << s.key.str();
}

TEST(KeFamily, Examples) {
  EXPECT_TRUE(is_ke_family(key(1, Tag::S11, 3, 3)));
  EXPECT_FALSE(is_ke_family(key(1, Tag::S11, 1, 3)));
  EXPECT_TRUE(is_ke_family(key(3, Tag::S11, 3, 3, -2, -2)));
  EXPECT_THROW(is_ke_family(key(1, Tag::S11, 2, 2)), std::invalid_argument);
}

TEST(KeFamily, MatchesOracle) {
  for (int rho = 1; rho <= 3; ++rho)
    for (std::int64_t iota = 1; iota <= 20; ++iota)
      for (const auto& s : enumerate_all(rho, iota)) {
        const bool fam = is_ke_family(s.key);
        EXPECT_EQ(fam, is_ke_oracle(s.matrix)) << s.key.str();
        EXPECT_EQ(fam, is_ke_family_intro_form(s.key)) << s.key.str();
        if (fam && rho == 1) EXPECT_EQ(barycenters(s.matrix)[0].y, Rational(1, 6));
        if (fam && rho == 1) EXPECT_EQ(s.matrix.b, -2 - s.matrix.a);
      }
}

TEST(KeFamily, Rho3ProofIdentity) {
  // For S11 with iota+ = iota-, d = -a-b-c.
  for (std::int64_t iota = 1; iota <= 20; ++iota)
    for (const auto& s : enumerate_all(3, iota))
      if (s.key.series.tag == Tag::S11 && s.key.iota_plus == s.key.iota_minus)
        EXPECT_EQ(s.matrix.d, -s.matrix.a - s.matrix.b - s.matrix.c) << s.key.str();
}

TEST(Polygons, HullAndCentroid) {
  const Polygon sq = convex_hull({{Rational(1), Rational(1)},
                                  {Rational(-1), Rational(1)},
                                  {Rational(0), Rational(1)},
                                  {Rational(-1), Rational(-1)},
                                  {Rational(1), Rational(-1)}});
  EXPECT_EQ(sq.size(), 4u);
  const Point c = polygon_centroid(sq);
  EXPECT_EQ(c.x, Rational(0));
  EXPECT_EQ(c.y, Rational(0));
  // dual of the square [-1,1]^2 is the diamond with vertices (+-1, 0), (0, +-1)
  const Polygon d = dual_polygon(sq);
  EXPECT_EQ(d.size(), 4u);
  for (const auto& p : d) EXPECT_EQ(abs_value(p.x.num()) + abs_value(p.y.num()), 1);
}

TEST(Polygons, DualCentroidsMatchClosedForms) {
  for (int rho = 1; rho <= 3; ++rho)
    for (std::int64_t iota = 1; iota <= 15; ++iota)
      for (const auto& s : enumerate_all(rho, iota))
        EXPECT_EQ(barycenters(s.matrix), barycenters_from_polygons(s.matrix)) << s.key.str();
}

TEST(Polygons, RejectsNonSpecialKappa) {
  EXPECT_THROW(fano_polygon({2, 1, 0, -2, 0}, 0), std::invalid_argument);
}

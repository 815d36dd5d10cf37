#include <gtest/gtest.h>

#include <set>

#include "fiqs/canon.hpp"
#include "fiqs/series.hpp"

using namespace fiqs;

namespace {

SeriesKey key(int rho, Tag t, std::int64_t ip, std::int64_t im, std::optional<std::int64_t> c = std::nullopt,
              std::optional<std::int64_t> d = std::nullopt) {
  return SeriesKey{SeriesId{rho, t}, ip, im, c, d};
}

}  // namespace

TEST(Tags, NamesRoundTrip) {
  for (Tag t : kAllTags) EXPECT_EQ(parse_tag(tag_name(t)), t);
  EXPECT_EQ(parse_tag("S21"), Tag::S21);
  EXPECT_THROW(parse_tag("s13"), std::invalid_argument);
  EXPECT_EQ(make_tag(2, 1), Tag::S21);
}

TEST(DivisorPairs, LcmExact) {
  const auto pairs = divisor_pairs(12);
  for (auto [p, m] : pairs) EXPECT_EQ(lcm2(p, m), 12);
  EXPECT_EQ(pairs.size(), 15u);
  EXPECT_THROW(divisor_pairs(0), std::invalid_argument);
}

TEST(EnumerateEta, Examples) {
  EXPECT_EQ(enumerate_eta({1, Tag::S11}, 3), (std::vector<SeriesKey>{key(1, Tag::S11, 1, 3), key(1, Tag::S11, 3, 3)}));
  EXPECT_TRUE(enumerate_eta({2, Tag::S11}, 1).empty());
  EXPECT_EQ(enumerate_eta({2, Tag::S22}, 1), (std::vector<SeriesKey>{key(2, Tag::S22, 1, 1, -2)}));
  const auto r3 = enumerate_eta({3, Tag::S11}, 3);
  EXPECT_NE(std::find(r3.begin(), r3.end(), key(3, Tag::S11, 3, 3, -2, -2)), r3.end());
  EXPECT_THROW(enumerate_eta({1, Tag::S11}, 0), std::invalid_argument);
  EXPECT_THROW(enumerate_eta({4, Tag::S11}, 1), std::invalid_argument);
}

TEST(EnumerateEta, LexicographicOrder) {
  for (int rho = 1; rho <= 3; ++rho)
    for (Tag t : kAllTags)
      for (std::int64_t iota = 1; iota <= 24; ++iota) {
        const auto keys = enumerate_eta({rho, t}, iota);
        for (std::size_t i = 1; i < keys.size(); ++i) {
          const auto& p = keys[i - 1];
          const auto& q = keys[i];
          EXPECT_LT(std::tie(p.iota_plus, p.iota_minus, p.c, p.d), std::tie(q.iota_plus, q.iota_minus, q.c, q.d));
        }
        for (const auto& k : keys) EXPECT_TRUE(in_series(k)) << k.str();
      }
}

TEST(Rho2Bounds, ExactRationals) {
  // S22 at (1,1): N = 6, 1 - 3 <= c <= -3/2
  EXPECT_EQ(rho2_c_range(Tag::S22, 1, 1), (std::pair<std::int64_t, std::int64_t>{-2, -2}));
  // S11 at (1,1): N = 2, 0 <= c <= -1/2 is empty
  auto [lo, hi] = rho2_c_range(Tag::S11, 1, 1);
  EXPECT_GT(lo, hi);
}

TEST(MatrixFromEta, Examples) {
  EXPECT_EQ(matrix_from_eta(key(1, Tag::S11, 1, 1)), (DefiningMatrix{1, 0, -2, 0, 0}));
  EXPECT_EQ(matrix_from_eta(key(2, Tag::S22, 1, 1, -2)), (DefiningMatrix{2, 1, 0, -2, 0}));
  EXPECT_EQ(matrix_from_eta(key(3, Tag::S11, 3, 3, -2, -2)), (DefiningMatrix{3, 3, 1, -2, -2}));
  EXPECT_THROW(matrix_from_eta(key(1, Tag::S11, 2, 2)), std::invalid_argument);
  EXPECT_THROW(matrix_from_eta(key(2, Tag::S22, 1, 1, -1)), std::invalid_argument);
}

TEST(MatrixFromEta, Rho3S21SecondRow) {
  const auto m = matrix_from_eta(key(3, Tag::S21, 1, 3, -1, -1));
  const IntMatrix p = m.expand();
  EXPECT_EQ(p(1, 4), 1);
  EXPECT_EQ(p(1, 5), 1);
}

TEST(Expand, FullMatrix) {
  const IntMatrix p = DefiningMatrix{2, 1, 0, -2, 0}.expand();
  EXPECT_EQ(p, (IntMatrix{{-1, -1, 1, 1, 0}, {-1, -1, 0, 0, 2}, {1, 0, 0, -2, 1}}));
}

TEST(EnumerateAll, Examples) {
  EXPECT_EQ(enumerate_all(1, 1).size(), 1u);
  EXPECT_EQ(enumerate_all(1, 2).size(), 0u);
  const auto r2 = enumerate_all(2, 1);
  ASSERT_EQ(r2.size(), 2u);
  EXPECT_EQ(r2[0].key, key(2, Tag::S12, 1, 1, -1));
  EXPECT_EQ(r2[1].key, key(2, Tag::S22, 1, 1, -2));
}

TEST(EnumerateAll, ValidDistinctAndParity) {
  for (int rho = 1; rho <= 3; ++rho)
    for (std::int64_t iota = 1; iota <= 30; ++iota) {
      std::set<DefiningMatrix> seen;
      for (const auto& s : enumerate_all(rho, iota)) {
        EXPECT_TRUE(validate(s.matrix).ok()) << s.key.str();
        EXPECT_TRUE(seen.insert(s.matrix).second) << s.key.str();
        EXPECT_EQ(s.key.gorenstein_index(), iota);
        if (rho == 1) {
          const int pa = static_cast<int>(s.matrix.a & 1), pb = static_cast<int>(s.matrix.b & 1);
          EXPECT_EQ(make_tag(pa + 1, pb + 1), s.key.series.tag) << s.key.str();
        }
      }
    }
}

TEST(EnumerateAll, FirstCounts) {
  const std::vector<std::size_t> want[4] = {
      {}, {1, 0, 2, 2, 2, 0, 2, 3, 3, 0}, {2, 0, 9, 0, 25, 0, 35, 0, 36, 0}, {2, 10, 34, 48, 89, 157, 170, 217, 393, 408}};
  for (int rho = 1; rho <= 3; ++rho)
    for (std::int64_t iota = 1; iota <= 10; ++iota)
      EXPECT_EQ(enumerate_all(rho, iota).size(), want[rho][iota - 1]) << "rho " << rho << " iota " << iota;
}

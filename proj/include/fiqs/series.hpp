#pragma once

// The twelve series S_ij(rho, iota) of normal-form defining matrices, indexed
// by the local Gorenstein indices of the two elliptic fixed points.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fiqs/core.hpp"

namespace fiqs {

enum class Tag : std::uint8_t { S11, S12, S21, S22 };

inline constexpr std::array<Tag, 4> kAllTags = {Tag::S11, Tag::S12, Tag::S21, Tag::S22};

std::string_view tag_name(Tag tag);  // "s11" .. "s22"
Tag parse_tag(std::string_view name);

/// 1 or 2: the first / second digit of the tag.
inline int plus_kind(Tag t) { return (t == Tag::S11 || t == Tag::S12) ? 1 : 2; }
inline int minus_kind(Tag t) { return (t == Tag::S11 || t == Tag::S21) ? 1 : 2; }
Tag make_tag(int plus_kind, int minus_kind);

struct SeriesId {
  int rho = 1;
  Tag tag = Tag::S11;

  friend bool operator==(const SeriesId&, const SeriesId&) = default;
};

/// eta = (iota+, iota-[, c[, d]]) together with its series.
struct SeriesKey {
  SeriesId series;
  std::int64_t iota_plus = 1;
  std::int64_t iota_minus = 1;
  std::optional<std::int64_t> c;
  std::optional<std::int64_t> d;

  std::int64_t gorenstein_index() const;
  std::string str() const;  // "rho=R s11 (ip,im[,c[,d]])"

  friend bool operator==(const SeriesKey&, const SeriesKey&) = default;
};

/// Normal-form defining matrix, stored through the free entries of its third
/// row. Entries that do not exist for the given rho are kept at zero.
struct DefiningMatrix {
  int rho = 1;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;

  /// Third row of the full 3 x (rho+3) matrix.
  std::vector<std::int64_t> third_row() const;
  IntMatrix expand() const;
  std::string str() const;  // third row, comma separated

  friend bool operator==(const DefiningMatrix&, const DefiningMatrix&) = default;
  friend auto operator<=>(const DefiningMatrix&, const DefiningMatrix&) = default;
};

struct Surface {
  SeriesKey key;
  DefiningMatrix matrix;
};

/// The two fixed first rows of the defining matrix for the given rho.
std::array<std::vector<std::int64_t>, 2> leading_rows(int rho);

void check_rho(int rho);

/// Membership predicate of S_ij(rho, lcm(iota+, iota-)).
bool in_series(const SeriesKey& key);

/// Ordered pairs (iota+, iota-) of divisors of iota with lcm exactly iota.
std::vector<std::pair<std::int64_t, std::int64_t>> divisor_pairs(std::int64_t iota);

/// Inclusive integer range of c for a rho = 2 series at fixed iota+-, empty
/// when first > second.
std::pair<std::int64_t, std::int64_t> rho2_c_range(Tag tag, std::int64_t iota_plus, std::int64_t iota_minus);

/// Bound N in -N <= 2c + d for a rho = 3 series.
std::int64_t rho3_weight(Tag tag, std::int64_t iota_plus, std::int64_t iota_minus);

/// Predicate on (iota+, iota-) alone, without the c / d constraints.
bool admits_pair(SeriesId series, std::int64_t iota_plus, std::int64_t iota_minus);

/// Calls fn(const SeriesKey&) for every eta of the series at Gorenstein index
/// iota, in ascending lexicographic order of (iota+, iota-, c, d).
template <class Fn>
void for_each_eta(SeriesId series, std::int64_t iota, Fn&& fn) {
  check_rho(series.rho);
  for (const auto& [ip, im] : divisor_pairs(iota)) {
    if (!admits_pair(series, ip, im)) continue;
    SeriesKey key{series, ip, im, std::nullopt, std::nullopt};
    if (series.rho == 1) {
      fn(std::as_const(key));
    } else if (series.rho == 2) {
      auto [lo, hi] = rho2_c_range(series.tag, ip, im);
      for (std::int64_t c = lo; c <= hi; ++c) {
        key.c = c;
        fn(std::as_const(key));
      }
    } else {
      const std::int64_t n = rho3_weight(series.tag, ip, im);
      // c <= d <= -1 and 2c + d >= -n force c >= ceil((1 - n) / 2).
      const std::int64_t c_lo = static_cast<std::int64_t>(ceil_div(1 - n, 2));
      for (std::int64_t c = c_lo; c <= -1; ++c) {
        const std::int64_t d_lo = std::max(c, -n - 2 * c);
        key.c = c;
        for (std::int64_t d = d_lo; d <= -1; ++d) {
          key.d = d;
          fn(std::as_const(key));
        }
      }
    }
  }
}

std::vector<SeriesKey> enumerate_eta(SeriesId series, std::int64_t iota);

/// The matrix P_eta; throws std::invalid_argument if the key is not in its series.
DefiningMatrix matrix_from_eta(const SeriesKey& key);
/// Same, without re-checking the series predicate.
DefiningMatrix matrix_from_eta_unchecked(const SeriesKey& key);

/// Calls fn(const Surface&) for every surface of Picard number rho and
/// Gorenstein index iota, series S11, S12, S21, S22 in turn.
template <class Fn>
void for_each_surface(int rho, std::int64_t iota, Fn&& fn) {
  for (Tag tag : kAllTags) {
    for_each_eta(SeriesId{rho, tag}, iota, [&](const SeriesKey& key) {
      Surface s{key, matrix_from_eta_unchecked(key)};
      fn(std::as_const(s));
    });
  }
}

std::vector<Surface> enumerate_all(int rho, std::int64_t iota);

}  // namespace fiqs

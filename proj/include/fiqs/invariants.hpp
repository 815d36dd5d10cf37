#pragma once

// Class groups, local data at the fixed points, degree, log canonicity,
// Picard index and minimal resolution chains.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fiqs/series.hpp"

namespace fiqs {

struct ClassGroup {
  std::int64_t free_rank = 0;
  Int torsion_order = 1;

  friend bool operator==(const ClassGroup&, const ClassGroup&) = default;
};

/// x+ and x- are the elliptic fixed points, x0, x1, x2 the hyperbolic ones.
enum class FixedPoint : std::uint8_t { plus, minus, x0, x1, x2 };

std::string_view point_key(FixedPoint p);  // "x+", "x-", "x0", "x1", "x2"
FixedPoint parse_point(std::string_view key);
/// The points present for Picard number rho, in the order above.
std::vector<FixedPoint> fixed_points(int rho);

struct LocalData {
  std::map<FixedPoint, Int> orders;
  // Local Gorenstein indices of x+ and x-; the remaining points have index 1.
  std::int64_t iota_plus = 1;
  std::int64_t iota_minus = 1;

  friend bool operator==(const LocalData&, const LocalData&) = default;
};

struct ResolutionGraph {
  std::map<FixedPoint, std::vector<std::int64_t>> chains;  // empty chain: smooth point

  friend bool operator==(const ResolutionGraph&, const ResolutionGraph&) = default;
};

struct SurfaceRecord {
  SeriesKey key;
  DefiningMatrix matrix;
  ClassGroup class_group;
  LocalData local;
  std::int64_t gorenstein_index = 1;
  Rational degree;
  Rational log_canonicity;
  Int picard_index = 1;
  bool ke = false;
  ResolutionGraph resolution;

  friend bool operator==(const SurfaceRecord&, const SurfaceRecord&) = default;
};

ClassGroup class_group(const DefiningMatrix& m);
ClassGroup class_group_oracle(const DefiningMatrix& m);

/// Local class group orders; iota fields are left at 1.
LocalData local_orders(const DefiningMatrix& m);

struct LocalGorenstein {
  std::int64_t plus = 1;
  std::int64_t minus = 1;

  friend bool operator==(const LocalGorenstein&, const LocalGorenstein&) = default;
};

LocalGorenstein local_gorenstein(const DefiningMatrix& m);

enum class Side : std::uint8_t { plus, minus };
std::int64_t local_gorenstein_oracle(const DefiningMatrix& m, Side side);

Rational degree(const DefiningMatrix& m);
Rational degree_from_eta(const SeriesKey& key);

Rational log_canonicity(const DefiningMatrix& m);

Int picard_index(const DefiningMatrix& m);
Int picard_index_from_eta(const SeriesKey& key);

/// Throws std::invalid_argument if the key is not in its series.
ResolutionGraph resolution_graph(const SeriesKey& key);

/// Determinant of the negated intersection matrix of a chain (1 for an empty chain).
Int chain_determinant(const std::vector<std::int64_t>& weights);

/// Every field except ke, which callers fill in.
SurfaceRecord compute_invariants(const Surface& s);

/// Degree, log canonicity and Picard index bounds; returns the violated ones.
std::vector<std::string> bound_violations(const SurfaceRecord& r);
/// iota = lcm, local index divisibility, iota | picard index, positivity.
std::vector<std::string> divisibility_violations(const SurfaceRecord& r);

}  // namespace fiqs

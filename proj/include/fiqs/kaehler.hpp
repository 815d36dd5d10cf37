#pragma once

// Kaehler-Einstein test: barycenters of the special toric degenerations and
// the classification families.

#include <vector>

#include "fiqs/series.hpp"

namespace fiqs {

struct Barycenter {
  int kappa = 0;
  Rational x;
  Rational y;

  friend bool operator==(const Barycenter&, const Barycenter&) = default;
};

/// rho=1: {1,2}; rho=2: {2}; rho=3: {0,1,2}.
std::vector<int> special_kappas(int rho);

/// Closed-form barycenters, one per special kappa.
std::vector<Barycenter> barycenters(const DefiningMatrix& m);

/// True iff every special barycenter has x = 0 and y > 0.
bool is_ke_oracle(const DefiningMatrix& m);

bool is_ke_family(const SeriesKey& key);
/// rho=3 variant with the ranges -J+1 <= c <= -2, max(c, -2J-2c) <= d <= -J-1-c
/// (J = iota for S11, 2 iota for S22); equals is_ke_family for rho 1, 2.
bool is_ke_family_intro_form(const SeriesKey& key);

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};
using Polygon = std::vector<Point>;

/// Fano polygon of the toric degeneration kappa, vertices counterclockwise.
Polygon fano_polygon(const DefiningMatrix& m, int kappa);
/// Counterclockwise convex hull with collinear points dropped.
Polygon convex_hull(Polygon pts);
/// {u : <u, v> >= -1 for v in P}; P must contain the origin in its interior.
Polygon dual_polygon(const Polygon& p);
Point polygon_centroid(const Polygon& p);

/// Centroid of the dual of each special Fano polygon.
std::vector<Barycenter> barycenters_from_polygons(const DefiningMatrix& m);

}  // namespace fiqs

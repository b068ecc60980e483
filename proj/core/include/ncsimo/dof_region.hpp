#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace ncsimo {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& q);
double to_double(const Rational& q);

struct RationalPoint {
  Rational d1;
  Rational d2;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

// a1 d1 + a2 d2 <= b
struct Halfspace {
  Rational a1;
  Rational a2;
  Rational b;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

// Nonnegativity d1, d2 >= 0 is implied and not listed among the halfspaces.
// Vertices run counterclockwise from (0,0).
struct DofRegion {
  std::vector<Halfspace> halfspaces;
  std::vector<RationalPoint> vertices;
};

DofRegion region_from_halfspaces(std::vector<Halfspace> halfspaces);
// Convex hull of the points and the origin.
DofRegion region_from_points(const std::vector<RationalPoint>& points);

DofRegion outer_region(int T, int N);
DofRegion inner_region(int T, int N);

bool regions_equal(const DofRegion& a, const DofRegion& b);
bool membership(const DofRegion& region, const Rational& d1, const Rational& d2);
std::vector<RationalPoint> polygon_export(const DofRegion& region);
// CSV rows "d1,d2" with exact fractions, first row "0/1,0/1".
std::string polygon_csv(const DofRegion& region);

struct WeightPair {
  Rational lambda1;
  Rational lambda2;
};

void validate(const WeightPair& w);

// max over the region of lambda . d, by vertex enumeration.
Rational max_weighted_sum(const DofRegion& region, const WeightPair& w);

}  // namespace ncsimo

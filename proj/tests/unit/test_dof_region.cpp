#include <algorithm>

#include <gtest/gtest.h>

#include "ncsimo/dof_region.hpp"
#include "ncsimo/error.hpp"

namespace ncsimo {
namespace {

using R = Rational;

TEST(Outer, FiveThree) {
  const DofRegion r = outer_region(5, 3);
  const std::vector<Halfspace> hs = {{R(1, 3), 1, R(4, 5)}, {1, R(1, 3), R(4, 5)}};
  ASSERT_EQ(r.halfspaces.size(), 2u);
  for (const auto& h : hs) EXPECT_NE(std::find(r.halfspaces.begin(), r.halfspaces.end(), h), r.halfspaces.end());
  const std::vector<RationalPoint> vs = {{0, 0}, {R(4, 5), 0}, {R(3, 5), R(3, 5)}, {0, R(4, 5)}};
  EXPECT_EQ(r.vertices, vs);
}

TEST(Outer, SingleAntenna) {
  const DofRegion r = outer_region(4, 1);
  ASSERT_EQ(r.halfspaces.size(), 1u);
  EXPECT_EQ(r.halfspaces[0], (Halfspace{1, 1, R(3, 4)}));
}

TEST(Outer, UnitCoherenceIsOrigin) {
  for (int N = 1; N <= 8; ++N) {
    const DofRegion r = outer_region(1, N);
    ASSERT_EQ(r.halfspaces.size(), 1u);
    EXPECT_EQ(r.halfspaces[0], (Halfspace{1, 1, 0}));
    ASSERT_EQ(r.vertices.size(), 1u);
    EXPECT_EQ(r.vertices[0], (RationalPoint{0, 0}));
  }
}

TEST(Inner, Examples) {
  EXPECT_TRUE(regions_equal(inner_region(5, 3),
                            region_from_points({{0, 0}, {R(4, 5), 0}, {0, R(4, 5)}, {R(3, 5), R(3, 5)}})));
  EXPECT_TRUE(regions_equal(inner_region(2, 2), region_from_halfspaces({{1, 1, R(1, 2)}})));
  EXPECT_TRUE(regions_equal(inner_region(3, 2), region_from_halfspaces({{1, 1, R(2, 3)}})));
}

TEST(Equality, InnerMatchesOuterGrid) {
  for (int T = 1; T <= 16; ++T)
    for (int N = 1; N <= 8; ++N) EXPECT_TRUE(regions_equal(inner_region(T, N), outer_region(T, N))) << T << "," << N;
}

TEST(Equality, ScaledCopyDiffers) {
  const DofRegion r = outer_region(5, 3);
  std::vector<RationalPoint> half;
  for (const auto& v : r.vertices) half.push_back({v.d1 / 2, v.d2 / 2});
  EXPECT_FALSE(regions_equal(r, region_from_points(half)));
}

TEST(Equality, HalfspaceOrderIrrelevant) {
  const DofRegion a = region_from_halfspaces({{R(1, 3), 1, R(4, 5)}, {1, R(1, 3), R(4, 5)}});
  const DofRegion b = region_from_halfspaces({{1, R(1, 3), R(4, 5)}, {R(1, 3), 1, R(4, 5)}});
  EXPECT_TRUE(regions_equal(a, b));
  // Redundant and rescaled halfspaces describe the same set.
  const DofRegion c = region_from_halfspaces({{3, R(1), R(12, 5)}, {R(1, 3), 1, R(4, 5)}, {1, 1, 5}});
  EXPECT_TRUE(regions_equal(a, c));
}

TEST(Membership, Examples) {
  const DofRegion r = outer_region(5, 3);
  EXPECT_TRUE(membership(r, R(3, 5), R(3, 5)));
  for (const auto& h : r.halfspaces) EXPECT_EQ(h.a1 * R(3, 5) + h.a2 * R(3, 5), h.b);
  EXPECT_FALSE(membership(r, 1, 0));
  EXPECT_FALSE(membership(r, R(-1, 10), 0));
  for (int T = 1; T <= 6; ++T)
    for (int N = 1; N <= 4; ++N) EXPECT_TRUE(membership(outer_region(T, N), 0, 0));
}

TEST(Export, PolygonCsv) {
  const DofRegion r = outer_region(5, 3);
  EXPECT_EQ(polygon_export(r), r.vertices);
  EXPECT_EQ(polygon_csv(r), "0/1,0/1\n4/5,0/1\n3/5,3/5\n0/1,4/5\n");
}

TEST(WeightedSum, VertexMaximum) {
  const DofRegion r = outer_region(5, 3);
  EXPECT_EQ(max_weighted_sum(r, {1, 1}), R(6, 5));
  EXPECT_EQ(max_weighted_sum(r, {1, 0}), R(4, 5));
  EXPECT_EQ(max_weighted_sum(r, {R(1, 3), 1}), R(4, 5));
  EXPECT_THROW(validate(WeightPair{-1, 1}), Error);
}

TEST(Rationals, Formatting) {
  EXPECT_EQ(to_string(R(6, 8)), "3/4");
  EXPECT_EQ(to_string(R(2)), "2/1");
  EXPECT_DOUBLE_EQ(to_double(R(1, 4)), 0.25);
}

}  // namespace
}  // namespace ncsimo

// Copyright 2026 The hangar-planner Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <random>
#include <regex>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "hangar/geometry.hpp"
#include "support.hpp"

namespace hangar {
namespace {

using testing::data_path;
using testing::slurp;

Polygon rect(double x0, double y0, double x1, double y1) { return Polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}); }

// Distance from p to the closed axis-aligned rectangle (zero inside).
double rect_distance(const Rect& r, Vec2 p) {
  const double dx = std::max({r.x_min - p.x, 0.0, p.x - r.x_max});
  const double dy = std::max({r.y_min - p.y, 0.0, p.y - r.y_max});
  return std::hypot(dx, dy);
}

TEST(ParsePerimeter, JsonRectangle) {
  const Polygon p = parse_perimeter("[[0,0],[4,0],[4,2],[0,2]]", PerimeterFormat::kJsonVertices);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_DOUBLE_EQ(p.area(), 8.0);
  EXPECT_EQ(p[2], (Vec2{4, 2}));
}

TEST(ParsePerimeter, SvgPathMatchesJson) {
  const Polygon a = parse_perimeter("M 0 0 L 4 0 L 4 2 L 0 2 Z", PerimeterFormat::kSvgPath);
  const Polygon b = parse_perimeter("[[0,0],[4,0],[4,2],[0,2]]", PerimeterFormat::kJsonVertices);
  EXPECT_EQ(a.vertices(), b.vertices());
}

TEST(ParsePerimeter, SvgRelativeAndAxisCommands) {
  const Polygon a = parse_perimeter("m0,0 h4 v2 H0 z", PerimeterFormat::kSvgPath);
  const Polygon b = parse_perimeter("M0 0 L4 0 4 2 0 2Z", PerimeterFormat::kSvgPath);
  EXPECT_EQ(a.vertices(), b.vertices());
  const Polygon c = parse_perimeter(R"(<svg><path d='M 0 0 l 4 0 l 0 2 l -4 0 z'/></svg>)", PerimeterFormat::kSvgPath);
  EXPECT_EQ(a.vertices(), c.vertices());
}

TEST(ParsePerimeter, JsonObjectWithUnits) {
  const Polygon p =
      parse_perimeter(R"({"units":"m","vertices":[[0,0],[1,0],[1,1],[0,1],[0,0]]})", PerimeterFormat::kJsonVertices);
  EXPECT_EQ(p.size(), 4u);  // closing vertex dropped
}

TEST(ParsePerimeter, RejectsBadInput) {
  EXPECT_PLANNER_ERROR(parse_perimeter("M 0 0 C 1 1 2 2 3 3 Z", PerimeterFormat::kSvgPath),
                       ErrorCode::kUnsupportedCommand);
  EXPECT_PLANNER_ERROR(parse_perimeter("[[0,0],[1,0]]", PerimeterFormat::kJsonVertices),
                       ErrorCode::kDegeneratePolygon);
  EXPECT_PLANNER_ERROR(parse_perimeter("[[0,0],[1,0],[2,0]]", PerimeterFormat::kJsonVertices),
                       ErrorCode::kDegeneratePolygon);
  EXPECT_PLANNER_ERROR(parse_perimeter("[[0,0],[2,2],[2,0],[0,3]]", PerimeterFormat::kJsonVertices),
                       ErrorCode::kSelfIntersecting);
  EXPECT_PLANNER_ERROR(parse_perimeter("[[0,0],[1,0],", PerimeterFormat::kJsonVertices),
                       ErrorCode::kMalformedSource);
  EXPECT_PLANNER_ERROR(parse_perimeter(R"({"units":"ft","vertices":[[0,0],[1,0],[1,1]]})",
                                       PerimeterFormat::kJsonVertices),
                       ErrorCode::kMalformedSource);
  EXPECT_PLANNER_ERROR(parse_perimeter("<svg><path d='M0 0 L1 0 L1 1Z'/><path d='M0 0 L1 0 L1 1Z'/></svg>",
                                       PerimeterFormat::kSvgPath),
                       ErrorCode::kMalformedSource);
  EXPECT_PLANNER_ERROR(parse_perimeter("M 0 0 L 1 0 L 1 1 Z M 2 2 L 3 2 L 3 3 Z", PerimeterFormat::kSvgPath),
                       ErrorCode::kMalformedSource);
}

TEST(ParsePerimeter, FormatFromExtension) {
  EXPECT_EQ(perimeter_format_for("plane.SVG"), PerimeterFormat::kSvgPath);
  EXPECT_EQ(perimeter_format_for("plane.json"), PerimeterFormat::kJsonVertices);
}

// Independent read-back of the bundled drawing: pull every number out of the
// d attribute and pair them up.
TEST(ParsePerimeter, BundledOutlineMatchesDrawing) {
  const std::string svg = slurp(data_path("perimeters/a320.svg"));
  std::smatch m;
  ASSERT_TRUE(std::regex_search(svg, m, std::regex(R"re(\sd="([^"]*)")re")));
  const std::string d = m[1];
  std::vector<double> nums;
  const std::regex num(R"([-+]?[0-9]*\.?[0-9]+)");
  for (auto it = std::sregex_iterator(d.begin(), d.end(), num); it != std::sregex_iterator(); ++it)
    nums.push_back(std::stod(it->str()));
  ASSERT_EQ(nums.size() % 2, 0u);
  double lo = nums[0], hi = nums[0];
  for (std::size_t i = 0; i < nums.size(); i += 2) {
    lo = std::min(lo, nums[i]);
    hi = std::max(hi, nums[i]);
  }

  const Polygon p = parse_perimeter(svg, PerimeterFormat::kSvgPath);
  EXPECT_EQ(p.size(), nums.size() / 2);
  EXPECT_EQ(p.size(), 33u);
  EXPECT_DOUBLE_EQ(p.bounds().width(), hi - lo);
  EXPECT_DOUBLE_EQ(p.bounds().width(), 940.0);
}

TEST(ScaleToLength, UnitSquare) {
  const Polygon s = scale_to_length(rect(0, 0, 1, 1), 37.6);
  EXPECT_DOUBLE_EQ(s.bounds().width(), 37.6);
  EXPECT_DOUBLE_EQ(s.bounds().height(), 37.6);
}

TEST(ScaleToLength, PixelScaleFactor) {
  const Polygon px = rect(30, 0, 970, 100);
  const Polygon m = scale_to_length(px, 37.6);
  EXPECT_NEAR(m[1].x / px[1].x, 0.04, 1e-15);
  EXPECT_NEAR(m[2].y / px[2].y, 0.04, 1e-15);
}

TEST(ScaleToLength, IdempotentAndValidated) {
  const Polygon p = parse_perimeter(slurp(data_path("perimeters/a320.svg")), PerimeterFormat::kSvgPath);
  const Polygon once = scale_to_length(p, 37.6);
  const Polygon twice = scale_to_length(once, 37.6);
  for (std::size_t i = 0; i < once.size(); ++i) {
    EXPECT_NEAR(once[i].x, twice[i].x, 1e-12);
    EXPECT_NEAR(once[i].y, twice[i].y, 1e-12);
  }
  EXPECT_PLANNER_ERROR(scale_to_length(p, 0.0), ErrorCode::kNonPositiveInput);
  EXPECT_PLANNER_ERROR(scale_to_length(p, -1.0), ErrorCode::kNonPositiveInput);
}

TEST(PointInPolygon, SquareCases) {
  const Polygon sq = rect(0, 0, 1, 1);
  EXPECT_TRUE(point_in_polygon({0.5, 0.5}, sq));
  EXPECT_FALSE(point_in_polygon({2, 0}, sq));
  EXPECT_TRUE(point_in_polygon({1, 1}, sq));
  EXPECT_TRUE(point_in_polygon({0.5, 0}, sq));
}

TEST(PointInPolygon, ConcaveOutline) {
  // A "U": the notch between the arms is outside.
  const Polygon u({{0, 0}, {3, 0}, {3, 3}, {2, 3}, {2, 1}, {1, 1}, {1, 3}, {0, 3}});
  EXPECT_TRUE(point_in_polygon({0.5, 2.5}, u));
  EXPECT_FALSE(point_in_polygon({1.5, 2.0}, u));
  EXPECT_TRUE(point_in_polygon({1.5, 0.5}, u));
}

TEST(BufferPolygon, ZeroOffsetIsIdentity) {
  const Polygon p = rect(0, 0, 4, 2);
  const BufferedRegion r = buffer_polygon(p, 0.0);
  EXPECT_EQ(r.boundary.vertices(), p.vertices());
  EXPECT_DOUBLE_EQ(r.area(), 8.0);
}

TEST(BufferPolygon, RectangleAreaClosedForm) {
  const double tol = 0.01;
  const BufferedRegion r = buffer_polygon(rect(0, 0, 4, 2), 1.0, tol);
  const double exact = 8.0 + 12.0 * 1.0 + std::numbers::pi;
  // The polyline is inscribed, so it can only lose area, and at most one
  // sagitta strip along the arcs.
  EXPECT_LE(r.area(), exact);
  EXPECT_GE(r.area(), exact - 2 * std::numbers::pi * tol);
  EXPECT_NEAR(r.area(), 23.14, 0.07);
}

TEST(BufferPolygon, MembershipIsExactDistance) {
  const Rect base{0, 0, 4, 2};
  const BufferedRegion r = buffer_polygon(rect(0, 0, 4, 2), 1.0);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> x(-2, 6), y(-2, 4);
  for (int i = 0; i < 20000; ++i) {
    const Vec2 p{x(rng), y(rng)};
    const double d = rect_distance(base, p);
    if (std::abs(d - 1.0) < 1e-9) continue;
    EXPECT_EQ(r.contains(p), d < 1.0) << p.x << "," << p.y;
  }
}

TEST(BufferPolygon, GrowsMonotonically) {
  const Polygon p = scale_to_length(parse_perimeter(slurp(data_path("perimeters/a320.svg")),
                                                    PerimeterFormat::kSvgPath), 37.6);
  double prev = p.area();
  std::vector<BufferedRegion> regions;
  for (double d : {0.25, 0.5, 1.0, 2.0}) {
    regions.push_back(buffer_polygon(p, d));
    EXPECT_GT(regions.back().area(), prev);
    prev = regions.back().area();
  }
  std::mt19937_64 rng(11);
  const Rect box = regions.back().bounds();
  std::uniform_real_distribution<double> x(box.x_min, box.x_max), y(box.y_min, box.y_max);
  for (int i = 0; i < 5000; ++i) {
    const Vec2 q{x(rng), y(rng)};
    for (std::size_t k = 0; k + 1 < regions.size(); ++k)
      if (regions[k].contains(q)) {
        EXPECT_TRUE(regions[k + 1].contains(q));
      }
  }
}

TEST(BufferPolygon, RejectsBadArguments) {
  EXPECT_PLANNER_ERROR(buffer_polygon(rect(0, 0, 1, 1), -0.5), ErrorCode::kNonPositiveInput);
  EXPECT_PLANNER_ERROR(buffer_polygon(rect(0, 0, 1, 1), 0.5, 0.0), ErrorCode::kNonPositiveInput);
}

TEST(Discretize, InternalSquare) {
  const BufferedRegion r = buffer_polygon(rect(0, 0, 2, 2), 0.0);
  const TargetGrid g = discretize(r, 1.0, CoverageSide::kInternal);
  EXPECT_EQ(g.points.size(), 9u);
}

TEST(Discretize, ExternalRing) {
  const BufferedRegion r = buffer_polygon(rect(0, 0, 2, 2), 0.0);
  const TargetGrid g = discretize(r, 1.0, CoverageSide::kExternal, Rect::centred({1, 1}, 4, 4));
  EXPECT_EQ(g.points.size(), 16u);
  for (const Vec2& p : g.points) EXPECT_FALSE(r.contains(p));
}

TEST(Discretize, InternalAndExternalPartitionTheBay) {
  const Polygon p = scale_to_length(parse_perimeter(slurp(data_path("perimeters/a320.svg")),
                                                    PerimeterFormat::kSvgPath), 37.6);
  const BufferedRegion r = buffer_polygon(p, 0.5);
  const Rect bay = r.bounds().expanded(2, 2);
  const auto in = classify_lattice(r, bay, 0.5, CoverageSide::kInternal, bay);
  const auto out = classify_lattice(r, bay, 0.5, CoverageSide::kExternal, bay);
  const auto all = lattice_nodes(bay, 0.5);
  EXPECT_EQ(in.size() + out.size(), all.size());
  std::vector<Vec2> merged = in;
  merged.insert(merged.end(), out.begin(), out.end());
  std::sort(merged.begin(), merged.end());
  EXPECT_EQ(std::adjacent_find(merged.begin(), merged.end()), merged.end());
}

TEST(Discretize, DensityTracksArea) {
  const Polygon p = scale_to_length(parse_perimeter(slurp(data_path("perimeters/a320.svg")),
                                                    PerimeterFormat::kSvgPath), 37.6);
  const BufferedRegion r = buffer_polygon(p, 0.5);
  for (double s : {0.25, 0.5}) {
    const TargetGrid g = discretize(r, s, CoverageSide::kInternal);
    const double estimate = static_cast<double>(g.points.size()) * s * s;
    EXPECT_NEAR(estimate, r.area(), 0.08 * r.area()) << "spacing " << s;
  }
}

TEST(Discretize, BundledEnvelopeAtDefaultSpacing) {
  const Polygon p = scale_to_length(parse_perimeter(slurp(data_path("perimeters/a320.svg")),
                                                    PerimeterFormat::kSvgPath), 37.6);
  const TargetGrid g = discretize(buffer_polygon(p, 0.5), kDefaultGridSpacing, CoverageSide::kInternal);
  EXPECT_EQ(g.points.size(), 1350u);
  EXPECT_TRUE(std::is_sorted(g.points.begin(), g.points.end()));
}

TEST(Discretize, Errors) {
  const BufferedRegion r = buffer_polygon(rect(0, 0, 2, 2), 0.0);
  EXPECT_PLANNER_ERROR(discretize(r, 0.0, CoverageSide::kInternal), ErrorCode::kNonPositiveInput);
  EXPECT_PLANNER_ERROR(discretize(r, 1.0, CoverageSide::kExternal), ErrorCode::kInvalidArgument);
  EXPECT_PLANNER_ERROR(discretize(r, 1.0, CoverageSide::kExternal, Rect{0, 0, 1, 1}), ErrorCode::kInvalidArgument);
  // A bay that coincides with a rectangular region leaves nothing outside.
  EXPECT_PLANNER_ERROR(discretize(r, 1.0, CoverageSide::kExternal, r.bounds()), ErrorCode::kEmptyGrid);
}

}  // namespace
}  // namespace hangar

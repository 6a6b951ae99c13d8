// Copyright 2026 The sectrack Authors. All rights reserved.
//
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

#include <doctest.h>

#include "sectrack/geometry.hpp"
#include "test_support.hpp"

using namespace sectrack;
using testsupport::TestRand;

namespace {

ConvexRegion unit_square() {
  const Point2 pts[] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  return convex_hull(pts);
}

ConvexRegion square(double x0, double y0, double x1, double y1) {
  const Point2 pts[] = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
  return convex_hull(pts);
}

bool vertices_equal(const ConvexRegion& a, const ConvexRegion& b, double tol = 1e-12) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (distance(a.vertices()[i], b.vertices()[i]) > tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("sector polygon is a conservative superset of the wedge") {
  Sector s;
  s.origin = {0.0, 0.0};
  s.r_lo = 9.488;
  s.r_hi = 10.486;
  s.theta_lo = deg2rad(29.5);
  s.theta_hi = deg2rad(30.5);

  const ConvexRegion poly = sector_to_polygon(s, 3);
  CHECK(poly.contains({10.0 * std::cos(deg2rad(30.0)), 10.0 * std::sin(deg2rad(30.0))}));
  CHECK(poly.contains({8.6603, 5.0000}));

  // All four wedge corners.
  for (double r : {s.r_lo, s.r_hi}) {
    for (double th : {s.theta_lo, s.theta_hi}) {
      CHECK(poly.contains(unit_vector(th) * r));
    }
  }

  // Analytic wedge area is a lower bound.
  const double wedge_area = 0.5 * s.width() * (s.r_hi * s.r_hi - s.r_lo * s.r_lo);
  CHECK(wedge_area == doctest::Approx(0.1740).epsilon(0.01));
  CHECK(poly.area() >= wedge_area);
}

TEST_CASE("sector polygon rejects invalid sectors") {
  Sector s;
  s.origin = {0, 0};
  s.r_lo = 2.0;
  s.r_hi = 1.0;  // inverted
  s.theta_lo = 0.0;
  s.theta_hi = 0.1;
  CHECK_THROWS_AS(sector_to_polygon(s, 4), Error);

  s.r_hi = 3.0;
  s.theta_hi = s.theta_lo;  // zero width
  CHECK_THROWS_AS(sector_to_polygon(s, 4), Error);

  s.theta_hi = s.theta_lo + kPi;  // too wide
  CHECK_THROWS_AS(sector_to_polygon(s, 4), Error);
}

TEST_CASE("conservativeness: sampled wedge points stay inside every polygonization") {
  TestRand rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    Sector s;
    s.origin = {rng.uniform(-30, 30), rng.uniform(-30, 30)};
    s.r_lo = rng.uniform(0.0, 30.0);
    s.r_hi = s.r_lo + rng.uniform(0.05, 5.0);
    s.theta_lo = rng.uniform(-kPi, kPi);
    s.theta_hi = s.theta_lo + rng.uniform(0.005, kPi / 2.0);

    const ConvexRegion polys[] = {sector_to_polygon(s, 1), sector_to_polygon(s, 2),
                                  sector_to_polygon(s, 4), sector_to_polygon(s, 8)};
    for (int i = 0; i < 100; ++i) {
      const Point2 p = testsupport::sample_in_wedge(rng, s);
      for (const auto& poly : polys) {
        REQUIRE(poly.contains(p));
      }
    }
  }
}

TEST_CASE("intersect: axis-aligned overlap, disjoint, idempotent") {
  const ConvexRegion a = unit_square();
  const ConvexRegion b = square(0.5, 0.0, 1.5, 1.0);
  const ConvexRegion ab = intersect(a, b);
  CHECK(ab.area() == doctest::Approx(0.5).epsilon(1e-12));

  CHECK(intersect(a, square(5, 5, 6, 6)).is_empty());

  const ConvexRegion self = intersect(a, a);
  CHECK(self.area() == doctest::Approx(a.area()).epsilon(1e-9));
}

TEST_CASE("intersect: area never exceeds either input") {
  TestRand rng(7);
  for (int i = 0; i < 200; ++i) {
    const ConvexRegion a = testsupport::random_convex_polygon(
        rng, {rng.uniform(-5, 5), rng.uniform(-5, 5)}, rng.uniform(0.5, 4.0),
        rng.uniform_int(3, 12));
    const ConvexRegion b = testsupport::random_convex_polygon(
        rng, {rng.uniform(-5, 5), rng.uniform(-5, 5)}, rng.uniform(0.5, 4.0),
        rng.uniform_int(3, 12));
    const ConvexRegion ab = intersect(a, b);
    CHECK(ab.area() <= std::min(a.area(), b.area()) + 1e-9);
  }
}

TEST_CASE("area: squares, triangles and a Monte Carlo pentagon") {
  CHECK(unit_square().area() == doctest::Approx(1.0).epsilon(1e-12));

  const Point2 tri[] = {{0, 0}, {2, 0}, {0, 2}};
  CHECK(convex_hull(tri).area() == doctest::Approx(2.0).epsilon(1e-12));

  TestRand rng(11);
  const ConvexRegion pentagon = testsupport::random_convex_polygon(rng, {1.0, -2.0}, 3.0, 5);
  const auto mc = testsupport::monte_carlo_region(rng, pentagon, 1000000);
  CHECK(pentagon.area() == doctest::Approx(mc.area).epsilon(0.02));
}

TEST_CASE("centroid: analytic cases and Monte Carlo pentagon") {
  const Point2 c = unit_square().centroid();
  CHECK(c.x == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(c.y == doctest::Approx(0.5).epsilon(1e-12));

  const Point2 tri[] = {{0, 0}, {3, 0}, {0, 3}};
  const Point2 tc = convex_hull(tri).centroid();
  CHECK(tc.x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tc.y == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(ConvexRegion::empty().centroid(), Error);

  TestRand rng(13);
  const ConvexRegion pentagon = testsupport::random_convex_polygon(rng, {-1.0, 2.5}, 2.0, 5);
  const auto mc = testsupport::monte_carlo_region(rng, pentagon, 1000000);
  CHECK(distance(pentagon.centroid(), mc.centroid) < 0.01);
}

TEST_CASE("dilate: offset area bound, zero radius, containment, monotonicity") {
  const ConvexRegion sq = unit_square();

  // Exact offset area A + P*rho + pi*rho^2 is a lower bound for the
  // circumscribed-disc dilation.
  const ConvexRegion grown = dilate(sq, 1.0, 8);
  CHECK(grown.area() >= 1.0 + 4.0 + kPi - 1e-9);

  CHECK(vertices_equal(dilate(sq, 0.0, 8), sq));

  const ConvexRegion half = dilate(sq, 0.5, 8);
  for (Point2 v : sq.vertices()) CHECK(half.contains(v));

  CHECK_THROWS_AS(dilate(sq, -0.1, 8), Error);
  CHECK_THROWS_AS(dilate(sq, 1.0, 3), Error);
  CHECK_THROWS_AS(dilate(ConvexRegion::empty(), 1.0, 8), Error);

  TestRand rng(17);
  for (int i = 0; i < 50; ++i) {
    const ConvexRegion r =
        testsupport::random_convex_polygon(rng, {0, 0}, 3.0, rng.uniform_int(3, 10));
    const double rho1 = rng.uniform(0.0, 1.0);
    const double rho2 = rho1 + rng.uniform(0.0, 1.0);
    const ConvexRegion d1 = dilate(r, rho1, 8);
    const ConvexRegion d2 = dilate(r, rho2, 8);
    for (Point2 v : d1.vertices()) REQUIRE(d2.contains(v));
  }
}

TEST_CASE("minkowski_sum: squares, identity point, sampled soundness") {
  const ConvexRegion sq = unit_square();
  const ConvexRegion doubled = minkowski_sum(sq, sq);
  CHECK(doubled.area() == doctest::Approx(4.0).epsilon(1e-12));
  const auto [lo, hi] = doubled.bounding_box();
  CHECK(lo.x == doctest::Approx(0.0));
  CHECK(hi.x == doctest::Approx(2.0));

  TestRand rng(19);
  const ConvexRegion p = testsupport::random_convex_polygon(rng, {2, 1}, 2.0, 7);
  CHECK(vertices_equal(minkowski_sum(p, ConvexRegion::point({0, 0})), p));

  const ConvexRegion q = testsupport::random_convex_polygon(rng, {-1, 3}, 1.5, 6);
  const ConvexRegion sum = minkowski_sum(p, q);
  for (int i = 0; i < 10000; ++i) {
    const Point2 u = testsupport::sample_in_polygon(rng, p);
    const Point2 v = testsupport::sample_in_polygon(rng, q);
    REQUIRE(sum.contains(u + v));
  }

  CHECK_THROWS_AS(minkowski_sum(ConvexRegion::empty(), sq), Error);
}

TEST_CASE("contains: centroid, far point, vertices") {
  TestRand rng(23);
  for (int i = 0; i < 25; ++i) {
    const ConvexRegion r =
        testsupport::random_convex_polygon(rng, {rng.uniform(-10, 10), rng.uniform(-10, 10)},
                                           rng.uniform(0.2, 5.0), rng.uniform_int(3, 12));
    CHECK(r.contains(r.centroid()));
    for (Point2 v : r.vertices()) CHECK(r.contains(v));
  }
  CHECK_FALSE(unit_square().contains({1e6, 1e6}));
  CHECK_FALSE(ConvexRegion::empty().contains({0, 0}));
}

TEST_CASE("convex_hull: interior points dropped, degenerate inputs, containment") {
  const Point2 with_interior[] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
  const ConvexRegion sq = convex_hull(with_interior);
  CHECK(sq.size() == 4);
  CHECK(sq.area() == doctest::Approx(1.0).epsilon(1e-12));

  const Point2 single[] = {{2.5, -1.0}};
  const ConvexRegion pt = convex_hull(single);
  CHECK(pt.is_point());
  CHECK(pt.contains({2.5, -1.0}));

  const Point2 collinear[] = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
  const ConvexRegion seg = convex_hull(collinear);
  CHECK(seg.size() == 2);
  CHECK(seg.area() == 0.0);
  CHECK(seg.contains({1.5, 1.5}));

  CHECK_THROWS_AS(convex_hull(std::span<const Point2>{}), Error);

  TestRand rng(29);
  std::vector<Point2> cloud;
  for (int i = 0; i < 100; ++i) {
    cloud.push_back({rng.uniform(-4, 4), rng.uniform(-4, 4)});
  }
  const ConvexRegion hull = convex_hull(cloud);
  for (Point2 p : cloud) REQUIRE(hull.contains(p));
}

TEST_CASE("intersection area matches the Monte Carlo oracle") {
  TestRand rng(31);
  for (int i = 0; i < 10; ++i) {
    const ConvexRegion a = testsupport::random_convex_polygon(rng, {0, 0}, 3.0, 8);
    const ConvexRegion b = testsupport::random_convex_polygon(
        rng, {rng.uniform(-1, 1), rng.uniform(-1, 1)}, 3.0, 8);
    const ConvexRegion ab = intersect(a, b);
    REQUIRE_FALSE(ab.is_empty());
    const double mc = testsupport::monte_carlo_intersection_area(rng, a, b, 200000);
    CHECK(ab.area() == doctest::Approx(mc).epsilon(0.02));
  }
}

TEST_CASE("angle normalization") {
  CHECK(normalize_deg(180.0) == doctest::Approx(180.0));
  CHECK(normalize_deg(-180.0) == doctest::Approx(180.0));
  CHECK(normalize_deg(540.0) == doctest::Approx(180.0));
  CHECK(normalize_deg(-0.4) == doctest::Approx(-0.4));
  CHECK(normalize_rad(3.0 * kPi) == doctest::Approx(kPi));
}

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

#include "test_support.hpp"

#include <algorithm>

namespace testsupport {

using sectrack::ConvexRegion;
using sectrack::Point2;
using sectrack::Sector;

ConvexRegion random_convex_polygon(TestRand& rng, Point2 center, double radius,
                                   int n_points) {
  std::vector<Point2> points;
  points.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double angle = rng.uniform(0.0, 2.0 * sectrack::kPi);
    const double r = radius * std::sqrt(rng.uniform(0.05, 1.0));
    points.push_back(center + sectrack::unit_vector(angle) * r);
  }
  return sectrack::convex_hull(points);
}

Point2 sample_in_polygon(TestRand& rng, const ConvexRegion& poly) {
  const auto& v = poly.vertices();
  if (v.size() == 1) return v[0];
  if (v.size() == 2) {
    const double t = rng.uniform(0.0, 1.0);
    return v[0] + (v[1] - v[0]) * t;
  }
  // Fan triangulation weighted by triangle area.
  std::vector<double> cumulative;
  cumulative.reserve(v.size() - 2);
  double total = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    total += 0.5 * std::abs(sectrack::cross(v[i] - v[0], v[i + 1] - v[0]));
    cumulative.push_back(total);
  }
  const double pick = rng.uniform(0.0, total);
  std::size_t tri = std::lower_bound(cumulative.begin(), cumulative.end(), pick) -
                    cumulative.begin();
  tri = std::min(tri, cumulative.size() - 1);
  const Point2 a = v[0], b = v[tri + 1], c = v[tri + 2];
  double u = rng.uniform(0.0, 1.0);
  double w = rng.uniform(0.0, 1.0);
  if (u + w > 1.0) {
    u = 1.0 - u;
    w = 1.0 - w;
  }
  return a + (b - a) * u + (c - a) * w;
}

Point2 sample_in_wedge(TestRand& rng, const Sector& s) {
  const double theta = rng.uniform(s.theta_lo, s.theta_hi);
  const double r =
      std::sqrt(rng.uniform(s.r_lo * s.r_lo, s.r_hi * s.r_hi));  // area-uniform
  return s.origin + sectrack::unit_vector(theta) * r;
}

MonteCarlo monte_carlo_region(TestRand& rng, const ConvexRegion& poly, int samples) {
  const auto [lo, hi] = poly.bounding_box();
  const double box_area = (hi.x - lo.x) * (hi.y - lo.y);
  int inside = 0;
  double sum_x = 0.0, sum_y = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Point2 p{rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y)};
    if (poly.contains(p)) {
      ++inside;
      sum_x += p.x;
      sum_y += p.y;
    }
  }
  MonteCarlo mc;
  mc.area = box_area * inside / samples;
  if (inside > 0) mc.centroid = {sum_x / inside, sum_y / inside};
  return mc;
}

double monte_carlo_intersection_area(TestRand& rng, const ConvexRegion& a,
                                     const ConvexRegion& b, int samples) {
  const auto [alo, ahi] = a.bounding_box();
  const auto [blo, bhi] = b.bounding_box();
  const Point2 lo{std::max(alo.x, blo.x), std::max(alo.y, blo.y)};
  const Point2 hi{std::min(ahi.x, bhi.x), std::min(ahi.y, bhi.y)};
  if (lo.x >= hi.x || lo.y >= hi.y) return 0.0;
  const double box_area = (hi.x - lo.x) * (hi.y - lo.y);
  int inside = 0;
  for (int i = 0; i < samples; ++i) {
    const Point2 p{rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y)};
    if (a.contains(p) && b.contains(p)) ++inside;
  }
  return box_area * inside / samples;
}

}  // namespace testsupport

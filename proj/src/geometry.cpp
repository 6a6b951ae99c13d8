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

#include "sectrack/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace sectrack {

double normalize_deg(double deg) {
  double x = std::fmod(deg + 180.0, 360.0);
  if (x <= 0.0) x += 360.0;
  return x - 180.0;
}

double normalize_rad(double rad) {
  double x = std::fmod(rad + kPi, 2.0 * kPi);
  if (x <= 0.0) x += 2.0 * kPi;
  return x - kPi;
}

void Sector::validate() const {
  if (!origin.finite() || !std::isfinite(r_lo) || !std::isfinite(r_hi) ||
      !std::isfinite(theta_lo) || !std::isfinite(theta_hi)) {
    fail(ErrorCode::constraint_violation, "sector: non-finite field");
  }
  if (r_lo < 0.0) fail(ErrorCode::constraint_violation, "sector: r_lo < 0");
  if (r_hi <= r_lo) fail(ErrorCode::constraint_violation, "sector: r_hi <= r_lo");
  const double w = width();
  if (w <= 0.0) fail(ErrorCode::constraint_violation, "sector: nonpositive angular width");
  if (w > kPi / 2.0 + 1e-12) {
    fail(ErrorCode::constraint_violation, "sector: angular width > pi/2");
  }
}

namespace {

double shoelace_area(const std::vector<Point2>& v) {
  if (v.size() < 3) return 0.0;
  double a2 = 0.0;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    a2 += cross(v[j], v[i]);
  }
  return 0.5 * a2;
}

bool lex_less(Point2 a, Point2 b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

// Andrew monotone chain, strict turns only (points merged when the cross
// product is <= merge_tol). Returns CCW starting at the lexicographic
// minimum. Degenerate inputs give a point or a segment.
std::vector<Point2> monotone_chain(std::vector<Point2> pts, double merge_tol) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Point2 a, Point2 b) {
                          return std::abs(a.x - b.x) <= 1e-12 &&
                                 std::abs(a.y - b.y) <= 1e-12;
                        }),
            pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;

  std::vector<Point2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 &&
           cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= merge_tol) {
      --k;
    }
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
    while (k >= lower &&
           cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= merge_tol) {
      --k;
    }
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);  // last point repeats the first
  return hull;
}

}  // namespace

// Merging with kCollinearTol can clip up to cross/chord meters off the hull,
// which exceeds the containment slack once edges get short. Outer-guaranteed
// constructions (sectors, dilations, Minkowski sums, clip results) therefore
// canonicalize with merge_tol = 0 and keep every strictly convex point; only
// the public convex_hull applies the tolerance merge.
ConvexRegion hull_of(std::vector<Point2> points, double merge_tol = 0.0) {
  return ConvexRegion(monotone_chain(std::move(points), merge_tol));
}

ConvexRegion::ConvexRegion(std::vector<Point2> canonical_ccw)
    : verts_(std::move(canonical_ccw)), area_(shoelace_area(verts_)) {}

ConvexRegion ConvexRegion::point(Point2 p) {
  if (!p.finite()) fail(ErrorCode::constraint_violation, "point region: non-finite");
  return hull_of({p});
}

ConvexRegion ConvexRegion::from_points(std::span<const Point2> points) {
  return convex_hull(points);
}

Point2 ConvexRegion::centroid() const {
  if (is_empty()) fail(ErrorCode::empty_region, "centroid of Empty region");
  if (verts_.size() < 3 || area_ < kMinArea) {
    Point2 sum;
    for (Point2 v : verts_) sum = sum + v;
    return sum * (1.0 / static_cast<double>(verts_.size()));
  }
  double cx = 0.0, cy = 0.0;
  for (std::size_t i = 0, j = verts_.size() - 1; i < verts_.size(); j = i++) {
    const double d = cross(verts_[j], verts_[i]);
    cx += (verts_[j].x + verts_[i].x) * d;
    cy += (verts_[j].y + verts_[i].y) * d;
  }
  const double inv = 1.0 / (6.0 * area_);
  return {cx * inv, cy * inv};
}

std::array<Point2, 2> ConvexRegion::bounding_box() const {
  if (is_empty()) fail(ErrorCode::empty_region, "bounding box of Empty region");
  Point2 lo = verts_[0], hi = verts_[0];
  for (Point2 v : verts_) {
    lo.x = std::min(lo.x, v.x);
    lo.y = std::min(lo.y, v.y);
    hi.x = std::max(hi.x, v.x);
    hi.y = std::max(hi.y, v.y);
  }
  return {lo, hi};
}

Point2 ConvexRegion::bbox_midpoint() const {
  const auto [lo, hi] = bounding_box();
  return {(lo.x + hi.x) * 0.5, (lo.y + hi.y) * 0.5};
}

bool ConvexRegion::contains(Point2 p) const {
  if (is_empty()) return false;
  if (verts_.size() == 1) return distance(p, verts_[0]) <= kContainTol;
  if (verts_.size() == 2) {
    const Point2 a = verts_[0], b = verts_[1];
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    const double t = len2 > 0.0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
    return distance(p, a + ab * t) <= kContainTol;
  }
  for (std::size_t i = 0, j = verts_.size() - 1; i < verts_.size(); j = i++) {
    const Point2 edge = verts_[i] - verts_[j];
    const double len = edge.norm();
    if (len <= 0.0) continue;
    if (cross(edge, p - verts_[j]) < -kContainTol * len) return false;
  }
  return true;
}

ConvexRegion convex_hull(std::span<const Point2> points) {
  if (points.empty()) fail(ErrorCode::constraint_violation, "convex_hull: no points");
  for (Point2 p : points) {
    if (!p.finite()) fail(ErrorCode::constraint_violation, "convex_hull: non-finite point");
  }
  return hull_of(std::vector<Point2>(points.begin(), points.end()), kCollinearTol);
}

namespace {

// Sutherland-Hodgman step: keep the part of `poly` on the left of edge a->b.
std::vector<Point2> clip_half_plane(const std::vector<Point2>& poly, Point2 a, Point2 b) {
  std::vector<Point2> out;
  out.reserve(poly.size() + 1);
  const Point2 dir = b - a;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 cur = poly[i];
    const Point2 nxt = poly[(i + 1) % n];
    const double dc = cross(dir, cur - a);
    const double dn = cross(dir, nxt - a);
    if (dc >= 0.0) out.push_back(cur);
    if ((dc > 0.0 && dn < 0.0) || (dc < 0.0 && dn > 0.0)) {
      const double t = dc / (dc - dn);
      out.push_back(cur + (nxt - cur) * t);
    }
  }
  return out;
}

}  // namespace

ConvexRegion intersect(const ConvexRegion& a, const ConvexRegion& b) {
  if (a.is_empty() || b.is_empty()) return ConvexRegion::empty();

  const ConvexRegion* subject = &a;
  const ConvexRegion* clipper = &b;
  if (clipper->size() < 3 && subject->size() >= 3) std::swap(subject, clipper);
  // Two degenerate inputs can only produce a zero-area result.
  if (clipper->size() < 3) return ConvexRegion::empty();

  std::vector<Point2> poly = subject->vertices();
  const auto& cv = clipper->vertices();
  for (std::size_t i = 0, j = cv.size() - 1; i < cv.size() && !poly.empty(); j = i++) {
    poly = clip_half_plane(poly, cv[j], cv[i]);
  }
  if (poly.empty()) return ConvexRegion::empty();

  ConvexRegion result = hull_of(std::move(poly));
  if (result.area() < kMinArea) return ConvexRegion::empty();
  return result;
}

ConvexRegion minkowski_sum(const ConvexRegion& a, const ConvexRegion& b) {
  if (a.is_empty() || b.is_empty()) {
    fail(ErrorCode::empty_region, "minkowski_sum: Empty input");
  }
  std::vector<Point2> sums;
  sums.reserve(a.size() * b.size());
  for (Point2 p : a.vertices()) {
    for (Point2 q : b.vertices()) sums.push_back(p + q);
  }
  return hull_of(std::move(sums));
}

ConvexRegion dilate(const ConvexRegion& r, double radius, int disc_steps) {
  if (r.is_empty()) fail(ErrorCode::empty_region, "dilate: Empty region");
  if (!(radius >= 0.0)) fail(ErrorCode::constraint_violation, "dilate: negative radius");
  if (disc_steps < 4) fail(ErrorCode::constraint_violation, "dilate: disc_steps < 4");
  if (radius == 0.0) return r;

  // Circumscribed regular polygon: contains the closed disc of `radius`.
  const double rv = radius / std::cos(kPi / disc_steps);
  std::vector<Point2> disc;
  disc.reserve(disc_steps);
  for (int i = 0; i < disc_steps; ++i) {
    disc.push_back(unit_vector(2.0 * kPi * i / disc_steps) * rv);
  }
  return minkowski_sum(r, hull_of(std::move(disc)));
}

ConvexRegion annular_wedge_hull(Point2 origin, double r_lo, double r_hi,
                                double theta_lo, double theta_hi, int arc_steps) {
  if (arc_steps < 1) fail(ErrorCode::constraint_violation, "wedge: arc_steps < 1");
  const double w = theta_hi - theta_lo;
  if (w < 0.0 || w > kPi / 2.0 + 1e-12) {
    fail(ErrorCode::constraint_violation, "wedge: width outside [0, pi/2]");
  }
  if (r_hi < r_lo || r_lo < 0.0) {
    fail(ErrorCode::constraint_violation, "wedge: bad radial interval");
  }

  std::vector<Point2> pts;
  if (w <= 1e-15) {  // radial segment (or single point)
    pts.push_back(origin + unit_vector(theta_lo) * r_lo);
    pts.push_back(origin + unit_vector(theta_lo) * r_hi);
    return hull_of(std::move(pts));
  }
  if (r_lo > 1e-12) {
    pts.push_back(origin + unit_vector(theta_lo) * r_lo);
    pts.push_back(origin + unit_vector(theta_hi) * r_lo);
  } else {
    pts.push_back(origin);
  }
  // Chord endpoints pushed to r_hi / cos(step/2): each chord is tangent to
  // the outer circle at its midpoint, so the arc lies inside.
  const double step = w / arc_steps;
  const double r_out = r_hi / std::cos(step / 2.0);
  for (int i = 0; i <= arc_steps; ++i) {
    pts.push_back(origin + unit_vector(theta_lo + step * i) * r_out);
  }
  return hull_of(std::move(pts));
}

ConvexRegion sector_to_polygon(const Sector& s, int arc_steps) {
  s.validate();
  if (arc_steps < 1) fail(ErrorCode::constraint_violation, "sector_to_polygon: arc_steps < 1");
  return annular_wedge_hull(s.origin, s.r_lo, s.r_hi, s.theta_lo, s.theta_hi, arc_steps);
}

}  // namespace sectrack

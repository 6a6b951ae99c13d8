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

#ifndef SECTRACK_GEOMETRY_HPP_
#define SECTRACK_GEOMETRY_HPP_

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "sectrack/error.hpp"

namespace sectrack {

inline constexpr double kPi = 3.14159265358979323846;

// Collinearity threshold on raw cross products.
inline constexpr double kCollinearTol = 1e-9;
// Containment slack on half-plane tests, in meters (signed distance).
inline constexpr double kContainTol = 1e-9;
// Clipped regions below this area collapse to Empty.
inline constexpr double kMinArea = 1e-12;

constexpr double deg2rad(double d) { return d * kPi / 180.0; }
constexpr double rad2deg(double r) { return r * 180.0 / kPi; }

/// Wrap an angle in degrees to (-180, 180].
double normalize_deg(double deg);
/// Wrap an angle in radians to (-pi, pi].
double normalize_rad(double rad);

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2() = default;
  constexpr Point2(double px, double py) : x(px), y(py) {}

  constexpr Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
  constexpr Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
  constexpr Point2 operator*(double s) const { return {x * s, y * s}; }

  double norm() const { return std::hypot(x, y); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline Point2 unit_vector(double angle_rad) { return {std::cos(angle_rad), std::sin(angle_rad)}; }
inline double distance(Point2 a, Point2 b) { return (a - b).norm(); }

/// Annular wedge seen from an observer: all positions with range in
/// [r_lo, r_hi] and global bearing in [theta_lo, theta_hi].
struct Sector {
  Point2 origin;
  double r_lo = 0.0;
  double r_hi = 0.0;
  double theta_lo = 0.0;
  double theta_hi = 0.0;

  double width() const { return theta_hi - theta_lo; }

  /// Throws ErrorCode::constraint_violation unless r_lo >= 0, r_hi > r_lo
  /// and the angular width lies in (0, pi/2].
  void validate() const;
};

/// Closed convex polygon with counterclockwise vertices. Doubles as the
/// universal belief-set representation: Empty (no vertices) and degenerate
/// point/segment regions are legal values. Immutable after construction.
class ConvexRegion {
 public:
  ConvexRegion() = default;  // Empty

  static ConvexRegion empty() { return ConvexRegion(); }
  static ConvexRegion point(Point2 p);
  /// Convex hull of arbitrary points; collinear points are merged.
  static ConvexRegion from_points(std::span<const Point2> points);

  const std::vector<Point2>& vertices() const { return verts_; }
  std::size_t size() const { return verts_.size(); }
  bool is_empty() const { return verts_.empty(); }
  bool is_point() const { return verts_.size() == 1; }
  /// Fewer than 3 vertices: Empty, point or segment.
  bool is_degenerate() const { return verts_.size() < 3; }

  /// Shoelace area; 0 for degenerate regions.
  double area() const { return area_; }

  /// Area centroid (vertex mean for degenerate regions).
  /// Throws ErrorCode::empty_region for Empty.
  Point2 centroid() const;

  /// Axis-aligned bounds as {min, max}. Throws for Empty.
  std::array<Point2, 2> bounding_box() const;
  Point2 bbox_midpoint() const;

  /// Closed containment with kContainTol slack on each half-plane.
  bool contains(Point2 p) const;

 private:
  friend ConvexRegion hull_of(std::vector<Point2> points, double merge_tol);

  explicit ConvexRegion(std::vector<Point2> canonical_ccw);

  std::vector<Point2> verts_;
  double area_ = 0.0;
};

/// Convex hull of one or more points. Throws on empty input.
ConvexRegion convex_hull(std::span<const Point2> points);

/// Exact intersection of convex polygons (half-plane clipping). Empty when
/// disjoint; results with area below kMinArea collapse to Empty.
ConvexRegion intersect(const ConvexRegion& a, const ConvexRegion& b);

/// Exact Minkowski sum (hull of pairwise vertex sums). Throws on Empty input.
ConvexRegion minkowski_sum(const ConvexRegion& a, const ConvexRegion& b);

/// Outer Minkowski dilation by a closed disc, the disc approximated by a
/// circumscribed regular disc_steps-gon. dilate(r, 0, k) == r.
ConvexRegion dilate(const ConvexRegion& r, double radius, int disc_steps);

/// Conservative polygonization of a sector: the outer arc becomes arc_steps
/// chords pushed out to radius r_hi / cos(step/2) so each chord is tangent to
/// the outer circle, and the inner arc becomes its chord. The result is a
/// convex superset of the exact wedge.
ConvexRegion sector_to_polygon(const Sector& s, int arc_steps);

/// Shared construction for sector_to_polygon and velocity displacement sets.
/// Accepts degenerate wedges (r_lo == r_hi, zero width, r_lo == 0) and always
/// returns a superset of {r * unit(theta) : r in [r_lo,r_hi], theta in
/// [theta_lo,theta_hi]} translated to origin.
ConvexRegion annular_wedge_hull(Point2 origin, double r_lo, double r_hi,
                                double theta_lo, double theta_hi, int arc_steps);

}  // namespace sectrack

#endif  // SECTRACK_GEOMETRY_HPP_

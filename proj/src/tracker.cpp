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

#include "sectrack/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sectrack {

PlayerTypeSpec player_type(int type_id) {
  if (type_id != 0) {
    fail(ErrorCode::constraint_violation,
         "unknown player type " + std::to_string(type_id));
  }
  return PlayerTypeSpec{0, 1.05, 0.6, 0.4};
}

bool player_type_known(int type_id) { return type_id == 0; }

MaxMoveTable build_max_move_table(const PlayerTypeSpec& spec, int horizon) {
  if (horizon < 0) fail(ErrorCode::constraint_violation, "max_move_table: negative horizon");
  if (!(spec.max_speed > 0.0)) {
    fail(ErrorCode::constraint_violation, "max_move_table: max_speed must be > 0");
  }
  MaxMoveTable table;
  table.type_id = spec.type_id;
  table.speeds.reserve(horizon);
  table.cumulative.reserve(horizon + 1);
  table.cumulative.push_back(0.0);
  double v = spec.max_speed;
  double total = 0.0;
  for (int n = 0; n < horizon; ++n) {
    table.speeds.push_back(v);
    total += v;
    table.cumulative.push_back(total);
    v = std::min(spec.max_speed, v * spec.speed_decay + spec.accel);
  }
  return table;
}

VelocityBounds bounds_from_reading(const VelocityReading& reading,
                                   const VelocityNoise& noise) {
  VelocityBounds vb;
  vb.speed_lo = std::max(0.0, reading.speed * (1.0 - noise.speed_eps));
  vb.speed_hi = reading.speed * (1.0 + noise.speed_eps);
  vb.dir_lo = reading.direction - noise.dir_eps;
  vb.dir_hi = reading.direction + noise.dir_eps;
  return vb;
}

Belief init_belief(ObjectKind kind, int type_id, const Sector& sector,
                   std::optional<VelocityReading> velocity_reading,
                   const VelocityNoise& noise) {
  Belief b;
  b.kind = kind;
  b.type_id = type_id;
  b.region = sector_to_polygon(sector, kSectorArcSteps);
  if (kind == ObjectKind::ball && velocity_reading) {
    const VelocityBounds vb = bounds_from_reading(*velocity_reading, noise);
    if (vb.dir_width() <= kPi / 2.0) b.velocity = vb;
  }
  return b;
}

Belief predict_player(const Belief& b, const MaxMoveTable& table) {
  if (b.kind != ObjectKind::player) {
    fail(ErrorCode::kind_mismatch, "predict_player on a non-player belief");
  }
  if (table.cumulative.size() < 2) {
    fail(ErrorCode::constraint_violation, "predict_player: table horizon < 1");
  }
  Belief out = b;
  out.region = dilate(b.region, table.cumulative[1], kDiscSteps);
  out.cycles_since_seen = b.cycles_since_seen + 1;
  return out;
}

namespace {

// Outer polygon of {s * unit(phi) : s in [lo, hi], phi in [dir_lo, dir_hi]}.
ConvexRegion displacement_set(const VelocityBounds& vb) {
  if (vb.speed_hi <= 1e-12) return ConvexRegion::point({0.0, 0.0});
  return annular_wedge_hull({0.0, 0.0}, std::max(0.0, vb.speed_lo), vb.speed_hi,
                            vb.dir_lo, vb.dir_hi, kSectorArcSteps);
}

}  // namespace

Belief predict_ball(const Belief& b, const BallParams& params) {
  if (b.kind != ObjectKind::ball) {
    fail(ErrorCode::kind_mismatch, "predict_ball on a non-ball belief");
  }
  Belief out = b;
  out.cycles_since_seen = b.cycles_since_seen + 1;
  if (!b.velocity) {
    out.region = dilate(b.region, params.fallback_reach, kDiscSteps);
    return out;
  }

  const VelocityBounds& vb = *b.velocity;
  const ConvexRegion disp = displacement_set(vb);
  out.region = disp.is_point() && disp.vertices()[0].norm() == 0.0
                   ? b.region
                   : minkowski_sum(b.region, disp);

  VelocityBounds next;
  next.speed_lo = std::max(0.0, vb.speed_lo * params.ball_decay * (1.0 - params.speed_inflation));
  next.speed_hi = vb.speed_hi * params.ball_decay * (1.0 + params.speed_inflation);
  const double half_inflation = params.dir_inflation / 2.0;
  next.dir_lo = vb.dir_lo - half_inflation;
  next.dir_hi = vb.dir_hi + half_inflation;
  if (next.dir_width() > kPi / 2.0) {
    out.velocity.reset();  // direction no longer informative; fall back next cycle
  } else {
    out.velocity = next;
  }
  return out;
}

Belief update(const Belief& b, const Sector& sector,
              std::optional<VelocityReading> velocity_reading,
              const VelocityNoise& noise) {
  const ConvexRegion sector_poly = sector_to_polygon(sector, kSectorArcSteps);
  Belief out = b;
  const ConvexRegion refined = intersect(b.region, sector_poly);
  if (refined.is_empty()) {
    // Motion model contradicted; trust the fresh observation.
    out.region = sector_poly;
    out.was_reset = true;
  } else {
    out.region = refined;
    out.was_reset = false;
  }
  out.cycles_since_seen = 0;
  if (b.kind == ObjectKind::ball && velocity_reading) {
    const VelocityBounds vb = bounds_from_reading(*velocity_reading, noise);
    if (vb.dir_width() <= kPi / 2.0) out.velocity = vb;
  }
  return out;
}

Point2 estimate(const Belief& b, EstimatorMode mode) {
  if (b.region.is_empty()) fail(ErrorCode::empty_region, "estimate on Empty region");
  return mode == EstimatorMode::centroid ? b.region.centroid()
                                         : b.region.bbox_midpoint();
}

Point2 baseline_estimate(const Observation& obs) {
  const double angle = obs.observer.body_angle + deg2rad(obs.bearing_deg);
  return obs.observer.position + unit_vector(angle) * obs.distance_q;
}

}  // namespace sectrack

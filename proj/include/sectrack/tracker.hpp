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

#ifndef SECTRACK_TRACKER_HPP_
#define SECTRACK_TRACKER_HPP_

#include <optional>
#include <vector>

#include "sectrack/geometry.hpp"
#include "sectrack/noise.hpp"

namespace sectrack {

// Set-membership tracker: one convex belief region per object, grown by the
// object's one-cycle reachable displacement set (predict) and cut by the
// observed sector (update). As long as true motion respects the configured
// bounds, the region is guaranteed to contain the true position, and its
// centroid is the denoised estimate.

inline constexpr int kSectorArcSteps = 4;  // chords used to polygonize a sector
inline constexpr int kDiscSteps = 8;       // polygon sides of a dilation disc

struct PlayerTypeSpec {
  int type_id = 0;
  double max_speed = 1.05;   // m/cycle
  double accel = 0.6;        // m/cycle^2
  double speed_decay = 0.4;  // per-cycle velocity retention
};

/// Built-in player types. Throws ErrorCode::constraint_violation for ids
/// without a registered parameterization.
PlayerTypeSpec player_type(int type_id);
bool player_type_known(int type_id);

/// Worst-case travel table: speeds[n] is the n-th per-cycle speed bound
/// starting from an unknown speed at the cap, cumulative[n] the distance
/// bound after n cycles (cumulative[0] == 0).
struct MaxMoveTable {
  int type_id = 0;
  std::vector<double> speeds;      // size horizon
  std::vector<double> cumulative;  // size horizon + 1
};

/// speeds: v0 = max_speed, v_{n+1} = min(max_speed, v_n * speed_decay + accel);
/// cumulative[n] = sum of the first n speeds.
MaxMoveTable build_max_move_table(const PlayerTypeSpec& spec, int horizon);

/// Bounded velocity knowledge for the ball: speed in [speed_lo, speed_hi],
/// direction in [dir_lo, dir_hi] (width <= pi/2).
struct VelocityBounds {
  double speed_lo = 0.0;
  double speed_hi = 0.0;
  double dir_lo = 0.0;
  double dir_hi = 0.0;
  double dir_width() const { return dir_hi - dir_lo; }
};

struct BallParams {
  double ball_decay = 0.94;
  double dir_inflation = deg2rad(1.0);  // radians of direction width per cycle
  double speed_inflation = 0.05;        // relative speed-band growth per cycle
  double fallback_reach = 3.0;          // m/cycle dilation when velocity unknown
};

enum class ObjectKind { ball, player };

struct Belief {
  ObjectKind kind = ObjectKind::player;
  int type_id = 0;
  ConvexRegion region;
  std::optional<VelocityBounds> velocity;  // ball only
  int cycles_since_seen = 0;
  bool was_reset = false;
};

/// Velocity band containing the true velocity of a reading produced by
/// observe(): speed in reading * [1 - speed_eps, 1 + speed_eps], direction in
/// reading +/- dir_eps.
VelocityBounds bounds_from_reading(const VelocityReading& reading,
                                   const VelocityNoise& noise);

/// Fresh belief from the first sighting. The region is the conservative
/// polygon of the sector; ball readings seed velocity bounds.
Belief init_belief(ObjectKind kind, int type_id, const Sector& sector,
                   std::optional<VelocityReading> velocity_reading,
                   const VelocityNoise& noise);

/// Grow a player region by the one-cycle travel bound (cumulative[1]).
Belief predict_player(const Belief& b, const MaxMoveTable& table);

/// Grow a ball region by the Minkowski sum with the velocity wedge (or a
/// fallback_reach disc when velocity is unknown), then decay and inflate the
/// carried bounds. If inflation would push the direction width past pi/2 the
/// bounds degrade to unknown.
Belief predict_ball(const Belief& b, const BallParams& params);

/// Intersect the predicted region with the newly observed sector. An empty
/// intersection means the motion model was violated: the belief resets to the
/// fresh sector polygon and was_reset is flagged.
Belief update(const Belief& b, const Sector& sector,
              std::optional<VelocityReading> velocity_reading,
              const VelocityNoise& noise);

enum class EstimatorMode { centroid, bbox_midpoint };

/// Point estimate from the belief region. Throws for Empty regions.
Point2 estimate(const Belief& b, EstimatorMode mode = EstimatorMode::centroid);

/// Naive de-quantization: the observed distance along the observed bearing.
Point2 baseline_estimate(const Observation& obs);

}  // namespace sectrack

#endif  // SECTRACK_TRACKER_HPP_

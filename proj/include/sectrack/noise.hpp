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

#ifndef SECTRACK_NOISE_HPP_
#define SECTRACK_NOISE_HPP_

#include <optional>

#include "sectrack/geometry.hpp"
#include "sectrack/rng.hpp"

namespace sectrack {

// Observation channel of a Soccer Simulation 2D style server: distances are
// quantized on a log-scale grid, bearings are rounded to whole degrees. The
// inverse maps (distance_interval / angle_interval) return intervals that are
// guaranteed to contain the true value, which is what makes sector-based
// belief tracking sound.

struct QuantizerParams {
  double inner_step = 0.1;  // log-domain grid step (dimensionless)
  double outer_step = 0.1;  // output grid step, meters
  double eps = 1e-6;        // meters, keeps ln() defined at d = 0
  // Half values always round away from zero.
};

struct VelocityNoise {
  double speed_eps = 0.1;               // relative speed band of a reading
  double dir_eps = deg2rad(5.0);        // radians, additive direction band
  double visibility_range = 30.0;       // meters, max range for a reading
};

struct ObserverPose {
  Point2 position;
  double body_angle = 0.0;              // radians, global frame
  double view_half_width = kPi / 4.0;   // radians, (0, pi]
};

struct VelocityReading {
  double speed = 0.0;      // m/cycle
  double direction = 0.0;  // radians, global frame
};

struct Observation {
  double distance_q = 0.0;  // quantized range, meters
  int bearing_deg = 0;      // whole degrees relative to observer body angle
  std::optional<VelocityReading> velocity_reading;
  ObserverPose observer;
  int cycle = 0;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};

/// Round half away from zero.
inline double rint_away(double x) { return std::round(x); }

/// Forward distance quantizer:
/// rint(exp(rint(ln(d + eps) / inner_step) * inner_step) / outer_step) * outer_step.
/// Nondecreasing in d. Throws on negative d.
double quantize_distance(double d, const QuantizerParams& q = {});

/// Nearest whole degree, halves away from zero; input is normalized to
/// (-180, 180] first.
int round_angle(double theta_deg);

/// Tight interval guaranteed to contain every true distance whose quantized
/// image equals d_q. Throws ErrorCode::no_preimage when d_q is not a
/// realizable quantizer output.
Interval distance_interval(double d_q, const QuantizerParams& q = {});

/// [bearing - 0.5, bearing + 0.5] degrees.
Interval angle_interval(int bearing_deg);

/// One pass through the channel. Returns nothing when the true bearing falls
/// outside +/- view_half_width of the body angle. A velocity reading is
/// attached only when true_vel is supplied and the object is within
/// vel_noise.visibility_range; its speed is reported as true_speed / u with
/// u uniform in [1 - speed_eps, 1 + speed_eps] and its direction offset
/// uniformly within +/- dir_eps, so the true velocity always lies inside the
/// (1 -/+ speed_eps)-scaled band a tracker rebuilds from the reading.
std::optional<Observation> observe(const ObserverPose& pose, Point2 true_pos,
                                   std::optional<Point2> true_vel,
                                   const QuantizerParams& q,
                                   const VelocityNoise& vel_noise, Rng& rng,
                                   int cycle = 0);

/// Invert one observation into the annular wedge that must contain the true
/// position. Propagates no_preimage for invalid distance values.
Sector observation_sector(const Observation& obs, const QuantizerParams& q = {});

}  // namespace sectrack

#endif  // SECTRACK_NOISE_HPP_

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

#include "sectrack/noise.hpp"

#include <cmath>

namespace sectrack {

namespace {

long long rint_away_ll(double x) { return std::llround(x); }

// Output grid index of the log-domain cell k.
long long forward_cell_image(long long k, const QuantizerParams& q) {
  return rint_away_ll(std::exp(static_cast<double>(k) * q.inner_step) / q.outer_step);
}

void check_params(const QuantizerParams& q) {
  if (!(q.inner_step > 0.0) || !(q.outer_step > 0.0) || !(q.eps > 0.0)) {
    fail(ErrorCode::constraint_violation, "quantizer: steps and eps must be positive");
  }
}

}  // namespace

double quantize_distance(double d, const QuantizerParams& q) {
  check_params(q);
  if (!std::isfinite(d) || d < 0.0) {
    fail(ErrorCode::constraint_violation, "quantize_distance: d must be finite and >= 0");
  }
  const double k = rint_away(std::log(d + q.eps) / q.inner_step);
  const double cell = std::exp(k * q.inner_step);
  return rint_away(cell / q.outer_step) * q.outer_step;
}

int round_angle(double theta_deg) {
  if (!std::isfinite(theta_deg)) {
    fail(ErrorCode::constraint_violation, "round_angle: non-finite angle");
  }
  return static_cast<int>(std::lround(normalize_deg(theta_deg)));
}

Interval distance_interval(double d_q, const QuantizerParams& q) {
  check_params(q);
  if (!std::isfinite(d_q) || d_q < 0.0) {
    fail(ErrorCode::no_preimage, "distance_interval: negative or non-finite value");
  }
  const long long m = rint_away_ll(d_q / q.outer_step);
  if (std::abs(static_cast<double>(m) * q.outer_step - d_q) > 1e-9) {
    fail(ErrorCode::no_preimage, "distance_interval: value off the output grid");
  }

  const double s = q.inner_step;
  if (m == 0) {
    // Every log cell k with exp(k*s) < outer_step/2 maps to zero, so the
    // preimage is a ray down to d = 0. Only the largest such k matters.
    long long k_hi = static_cast<long long>(
        std::floor(std::log(0.5 * q.outer_step) / s));
    while (forward_cell_image(k_hi, q) != 0) --k_hi;
    while (forward_cell_image(k_hi + 1, q) == 0) ++k_hi;
    const double hi = std::exp((static_cast<double>(k_hi) + 0.5) * s) - q.eps;
    return {0.0, hi};
  }

  // Cells mapping to m form one contiguous k-range because exp is monotone.
  // Bracket it from the output-bin edges, then confirm by forward evaluation.
  const long long k_first = static_cast<long long>(std::floor(
                                std::log((static_cast<double>(m) - 0.5) * q.outer_step) / s)) - 2;
  const long long k_last = static_cast<long long>(std::ceil(
                               std::log((static_cast<double>(m) + 0.5) * q.outer_step) / s)) + 2;
  long long k_min = 0, k_max = 0;
  bool found = false;
  for (long long k = k_first; k <= k_last; ++k) {
    if (forward_cell_image(k, q) == m) {
      if (!found) k_min = k;
      k_max = k;
      found = true;
    }
  }
  if (!found) {
    fail(ErrorCode::no_preimage, "distance_interval: no log cell maps to this value");
  }
  const double lo = std::max(0.0, std::exp((static_cast<double>(k_min) - 0.5) * s) - q.eps);
  const double hi = std::exp((static_cast<double>(k_max) + 0.5) * s) - q.eps;
  return {lo, hi};
}

Interval angle_interval(int bearing_deg) {
  if (bearing_deg < -180 || bearing_deg > 180) {
    fail(ErrorCode::constraint_violation, "angle_interval: bearing outside [-180, 180]");
  }
  return {static_cast<double>(bearing_deg) - 0.5, static_cast<double>(bearing_deg) + 0.5};
}

std::optional<Observation> observe(const ObserverPose& pose, Point2 true_pos,
                                   std::optional<Point2> true_vel,
                                   const QuantizerParams& q,
                                   const VelocityNoise& vel_noise, Rng& rng,
                                   int cycle) {
  if (!pose.position.finite() || !std::isfinite(pose.body_angle) ||
      !(pose.view_half_width > 0.0) || pose.view_half_width > kPi) {
    fail(ErrorCode::constraint_violation, "observe: invalid observer pose");
  }
  const Point2 rel = true_pos - pose.position;
  const double dist = rel.norm();
  const double bearing_global = std::atan2(rel.y, rel.x);
  const double rel_bearing = normalize_rad(bearing_global - pose.body_angle);
  if (std::abs(rel_bearing) > pose.view_half_width) return std::nullopt;

  Observation obs;
  obs.distance_q = quantize_distance(dist, q);
  obs.bearing_deg = round_angle(rad2deg(rel_bearing));
  obs.observer = pose;
  obs.cycle = cycle;

  if (true_vel && dist <= vel_noise.visibility_range) {
    const double speed = true_vel->norm();
    const double dir = std::atan2(true_vel->y, true_vel->x);
    const double u = rng.uniform(1.0 - vel_noise.speed_eps, 1.0 + vel_noise.speed_eps);
    const double offset = rng.uniform(-vel_noise.dir_eps, vel_noise.dir_eps);
    obs.velocity_reading = VelocityReading{speed / u, dir + offset};
  }
  return obs;
}

Sector observation_sector(const Observation& obs, const QuantizerParams& q) {
  const Interval radial = distance_interval(obs.distance_q, q);
  const Interval ang = angle_interval(obs.bearing_deg);
  Sector s;
  s.origin = obs.observer.position;
  s.r_lo = radial.lo;
  s.r_hi = radial.hi;
  s.theta_lo = obs.observer.body_angle + deg2rad(ang.lo);
  s.theta_hi = obs.observer.body_angle + deg2rad(ang.hi);
  s.validate();
  return s;
}

}  // namespace sectrack

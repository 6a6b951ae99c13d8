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
#include <map>

#include <doctest.h>

#include "sectrack/noise.hpp"
#include "test_support.hpp"

using namespace sectrack;
using testsupport::TestRand;

namespace {

// Independent oracle: the quantizer formula written out directly.
double oracle_quantize(double d) {
  const double inner = std::round(std::log(d + 1e-6) / 0.1) * 0.1;
  return std::round(std::exp(inner) / 0.1) * 0.1;
}

// Independent oracle: exhaustive scan over log cells. For each cell k whose
// forward image equals d_q, union the d-range that rounds into cell k, then
// return the hull.
Interval oracle_interval(double d_q) {
  bool found = false;
  Interval hull{0.0, 0.0};
  for (long long k = -420; k <= 120; ++k) {
    const double image = std::round(std::exp(k * 0.1) / 0.1) * 0.1;
    if (std::abs(image - d_q) > 1e-9) continue;
    const double lo = std::max(0.0, std::exp((k - 0.5) * 0.1) - 1e-6);
    const double hi = std::exp((k + 0.5) * 0.1) - 1e-6;
    if (!found) {
      hull = {lo, hi};
      found = true;
    } else {
      hull.lo = std::min(hull.lo, lo);
      hull.hi = std::max(hull.hi, hi);
    }
  }
  REQUIRE(found);
  return hull;
}

}  // namespace

TEST_CASE("quantize_distance: spot values frozen from the formula oracle") {
  CHECK(quantize_distance(10.0) == oracle_quantize(10.0));
  CHECK(std::abs(quantize_distance(10.0) - 10.0) < 1e-9);

  CHECK(quantize_distance(20.0) == oracle_quantize(20.0));
  CHECK(std::abs(quantize_distance(20.0) - 20.1) < 1e-9);

  CHECK(quantize_distance(0.0) == oracle_quantize(0.0));
  CHECK(quantize_distance(0.0) == 0.0);

  CHECK_THROWS_AS(quantize_distance(-0.5), Error);
}

TEST_CASE("quantize_distance: matches the oracle and is monotone") {
  TestRand rng(41);
  for (int i = 0; i < 10000; ++i) {
    const double d = rng.uniform(0.0, 80.0);
    REQUIRE(quantize_distance(d) == oracle_quantize(d));
  }
  for (int i = 0; i < 10000; ++i) {
    const double d1 = rng.uniform(0.0, 80.0);
    const double d2 = rng.uniform(0.0, 80.0);
    const double lo = std::min(d1, d2), hi = std::max(d1, d2);
    REQUIRE(quantize_distance(lo) <= quantize_distance(hi));
  }
}

TEST_CASE("round_angle: halves away from zero") {
  CHECK(round_angle(12.49) == 12);
  CHECK(round_angle(-0.4) == 0);
  CHECK(round_angle(12.5) == 13);
  CHECK(round_angle(-12.5) == -13);
  CHECK(round_angle(179.8) == 180);
  CHECK(round_angle(-180.0) == 180);  // normalized to (-180, 180] first
}

TEST_CASE("distance_interval: spot values via the exhaustive scan oracle") {
  const Interval ten = distance_interval(10.0);
  const Interval ten_oracle = oracle_interval(10.0);
  CHECK(ten.lo == doctest::Approx(ten_oracle.lo).epsilon(1e-12));
  CHECK(ten.hi == doctest::Approx(ten_oracle.hi).epsilon(1e-12));
  CHECK(ten.lo == doctest::Approx(9.4877).epsilon(1e-4));
  CHECK(ten.hi == doctest::Approx(10.4856).epsilon(1e-4));

  const Interval zero = distance_interval(0.0);
  const Interval zero_oracle = oracle_interval(0.0);
  CHECK(zero.lo == 0.0);
  CHECK(zero.hi == doctest::Approx(zero_oracle.hi).epsilon(1e-12));
  CHECK(zero.hi == doctest::Approx(0.0523).epsilon(1e-2));

  // 100.0 is off the realizable grid: no log cell rounds into it.
  CHECK_THROWS_AS(distance_interval(100.0), Error);
  CHECK_THROWS_AS(distance_interval(10.05), Error);
  CHECK_THROWS_AS(distance_interval(-1.0), Error);
}

TEST_CASE("distance_interval: agrees with the oracle on every reachable output") {
  TestRand rng(43);
  std::map<double, bool> seen;
  for (int i = 0; i < 4000; ++i) {
    const double d_q = quantize_distance(rng.uniform(0.0, 70.0));
    if (seen.count(d_q)) continue;
    seen[d_q] = true;
    const Interval got = distance_interval(d_q);
    const Interval want = oracle_interval(d_q);
    REQUIRE(got.lo == doctest::Approx(want.lo).epsilon(1e-12));
    REQUIRE(got.hi == doctest::Approx(want.hi).epsilon(1e-12));
  }
}

TEST_CASE("distance_interval: roundtrip containment") {
  TestRand rng(47);
  for (int i = 0; i < 10000; ++i) {
    const double d = rng.uniform(1.0, 60.0);
    const Interval iv = distance_interval(quantize_distance(d));
    REQUIRE(d >= iv.lo);
    REQUIRE(d <= iv.hi);
  }
}

TEST_CASE("noise escalates with distance") {
  double prev_width = -1.0;
  for (double d : {5.0, 10.0, 20.0, 40.0}) {
    const Interval iv = distance_interval(quantize_distance(d));
    CHECK(iv.width() >= prev_width);
    prev_width = iv.width();
  }
}

TEST_CASE("angle_interval: bounds and roundtrip") {
  const Interval twelve = angle_interval(12);
  CHECK(twelve.lo == doctest::Approx(11.5));
  CHECK(twelve.hi == doctest::Approx(12.5));
  const Interval zero = angle_interval(0);
  CHECK(zero.lo == doctest::Approx(-0.5));
  CHECK(zero.hi == doctest::Approx(0.5));

  TestRand rng(53);
  for (int i = 0; i < 10000; ++i) {
    const double theta = rng.uniform(-179.99, 180.0);
    const Interval iv = angle_interval(round_angle(theta));
    REQUIRE(theta >= iv.lo);
    REQUIRE(theta <= iv.hi);
  }
}

TEST_CASE("observe: cone test and quantized outputs") {
  ObserverPose pose;
  pose.position = {0, 0};
  pose.body_angle = 0.0;
  pose.view_half_width = deg2rad(45.0);
  Rng rng(1);

  const auto front = observe(pose, {10, 0}, std::nullopt, {}, {}, rng);
  REQUIRE(front.has_value());
  CHECK(std::abs(front->distance_q - 10.0) < 1e-9);
  CHECK(front->bearing_deg == 0);
  CHECK_FALSE(front->velocity_reading.has_value());

  CHECK_FALSE(observe(pose, {0, 10}, std::nullopt, {}, {}, rng).has_value());

  const auto far = observe(pose, {20, 0}, std::nullopt, {}, {}, rng);
  REQUIRE(far.has_value());
  CHECK(std::abs(far->distance_q - 20.1) < 1e-9);
}

TEST_CASE("observe: velocity reading bounds contain the true velocity") {
  ObserverPose pose;
  pose.view_half_width = kPi;
  const VelocityNoise noise;
  Rng rng(5);
  TestRand trng(59);
  for (int i = 0; i < 5000; ++i) {
    const Point2 vel{trng.uniform(-2, 2), trng.uniform(-2, 2)};
    const Point2 pos{trng.uniform(-20, 20), trng.uniform(-20, 20)};
    const auto obs = observe(pose, pos, vel, {}, noise, rng);
    REQUIRE(obs.has_value());
    REQUIRE(obs->velocity_reading.has_value());
    const VelocityReading r = *obs->velocity_reading;
    const double speed = vel.norm();
    REQUIRE(speed >= r.speed * (1.0 - noise.speed_eps) - 1e-12);
    REQUIRE(speed <= r.speed * (1.0 + noise.speed_eps) + 1e-12);
    const double dir_err = std::abs(normalize_rad(std::atan2(vel.y, vel.x) - r.direction));
    REQUIRE(dir_err <= noise.dir_eps + 1e-12);
  }

  // Beyond visibility_range no reading is attached.
  Rng rng2(6);
  const auto far = observe(pose, {40, 0}, Point2{1, 0}, {}, noise, rng2);
  REQUIRE(far.has_value());
  CHECK_FALSE(far->velocity_reading.has_value());
}

TEST_CASE("observation_sector: interval composition") {
  ObserverPose pose;
  pose.position = {0, 0};
  pose.body_angle = 0.0;
  pose.view_half_width = kPi;

  Observation obs;
  obs.distance_q = 10.0;
  obs.bearing_deg = 30;
  obs.observer = pose;
  const Sector s = observation_sector(obs);
  CHECK(s.r_lo == doctest::Approx(9.4877).epsilon(1e-4));
  CHECK(s.r_hi == doctest::Approx(10.4856).epsilon(1e-4));
  CHECK(rad2deg(s.theta_lo) == doctest::Approx(29.5));
  CHECK(rad2deg(s.theta_hi) == doctest::Approx(30.5));

  Observation zero;
  zero.distance_q = 0.0;
  zero.bearing_deg = 0;
  zero.observer = pose;
  const Sector sz = observation_sector(zero);
  CHECK(sz.r_lo == 0.0);
  CHECK(sz.r_hi == doctest::Approx(0.0523).epsilon(1e-2));
  // r_lo == 0 degrades to a fan from the origin.
  const ConvexRegion poly = sector_to_polygon(sz, 4);
  CHECK(poly.size() >= 3);
  CHECK(poly.contains({0, 0}));
  CHECK(poly.contains(unit_vector(deg2rad(0.3)) * 0.05));
}

TEST_CASE("channel soundness: true position inside the composed sector polygon") {
  TestRand trng(61);
  Rng rng(17);
  int produced = 0;
  for (int i = 0; i < 10000; ++i) {
    ObserverPose pose;
    pose.position = {trng.uniform(-30, 30), trng.uniform(-30, 30)};
    pose.body_angle = trng.uniform(-kPi, kPi);
    pose.view_half_width = trng.uniform(0.3, kPi);
    const Point2 true_pos{trng.uniform(-40, 40), trng.uniform(-40, 40)};
    const auto obs = observe(pose, true_pos, std::nullopt, {}, {}, rng);
    if (!obs) continue;
    ++produced;
    const Sector s = observation_sector(*obs);
    const ConvexRegion poly = sector_to_polygon(s, 4);
    REQUIRE(poly.contains(true_pos));
  }
  CHECK(produced > 3000);  // the scan should actually exercise the channel
}

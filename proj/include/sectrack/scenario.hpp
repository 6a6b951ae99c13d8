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

#ifndef SECTRACK_SCENARIO_HPP_
#define SECTRACK_SCENARIO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "sectrack/noise.hpp"
#include "sectrack/tracker.hpp"

namespace sectrack {

// Maximum speed a kick can give the ball; fallback_reach covers it, so the
// tracker stays sound even across kicks seen only after the fact.
inline constexpr double kBallSpeedMax = 3.0;

struct ScanPolicy {
  enum class Kind { fixed, rotating, track_object };
  Kind kind = Kind::fixed;
  int period = 1;          // rotating: cycles between steps
  double step_deg = 0.0;   // rotating: body-angle increment
  std::string target_id;   // track_object
};

struct KickEvent {
  int cycle = 0;
  double speed = 0.0;      // m/cycle, clamped to kBallSpeedMax
  double direction = 0.0;  // radians
};

struct MotionModel {
  enum class Kind { waypoints, random_walk };
  Kind kind = Kind::random_walk;
  double max_step = 0.0;        // random_walk: per-cycle displacement cap
  double speed = 0.0;           // waypoints: per-cycle path speed (0 = type max)
  std::vector<Point2> points;   // waypoints, visited cyclically
};

struct ObjectSpec {
  std::string id;
  ObjectKind kind = ObjectKind::player;
  int type_id = 0;              // players
  Point2 position;
  Point2 velocity;              // ball
  std::vector<KickEvent> kicks; // ball
  MotionModel motion;           // players
};

struct ScenarioConfig {
  int cycles = 1;
  std::uint64_t seed = 42;
  double field_half_x = 52.5;
  double field_half_y = 34.0;
  ObserverPose observer;
  ScanPolicy scan_policy;
  std::vector<ObjectSpec> objects;
  QuantizerParams quantizer;
  VelocityNoise vel_noise;
  BallParams ball_params;
  EstimatorMode estimator_mode = EstimatorMode::centroid;
};

/// Throws ErrorCode::config_invalid with one "field: problem" entry per
/// offending field, semicolon separated.
void validate(const ScenarioConfig& config);

/// Strict JSON loader: field names mirror ScenarioConfig, unknown keys are
/// errors. Throws config_invalid (bad content) or io_error (unreadable file).
ScenarioConfig parse_scenario(const std::string& json_text);
ScenarioConfig load_scenario(const std::string& path);

/// Serialize back to the same schema (used for config echoing and tests).
std::string scenario_to_json(const ScenarioConfig& config);

EstimatorMode parse_estimator_mode(const std::string& name);
std::string estimator_mode_name(EstimatorMode mode);

}  // namespace sectrack

#endif  // SECTRACK_SCENARIO_HPP_

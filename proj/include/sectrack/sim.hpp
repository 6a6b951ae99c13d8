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

#ifndef SECTRACK_SIM_HPP_
#define SECTRACK_SIM_HPP_

#include "sectrack/report.hpp"
#include "sectrack/rng.hpp"
#include "sectrack/scenario.hpp"

namespace sectrack {

/// Ground-truth state of one simulated object.
struct ObjectState {
  Point2 position;
  Point2 velocity;          // ball
  std::size_t waypoint = 0; // waypoint players: index of the next target
};

struct WorldState {
  int cycle = 0;  // completed steps
  std::vector<ObjectState> objects;  // parallel to config.objects
};

WorldState init_world(const ScenarioConfig& config);

/// Advance one cycle: ball moves then decays then takes any scheduled kick;
/// players follow their motion model; positions clamp to the field with
/// velocity zeroed at walls. Deterministic given (state, rng position).
void step_world(WorldState& state, const ScenarioConfig& config, Rng& rng);

/// Observer body angle for a 1-based cycle under the scan policy.
double scan_body_angle(const ScenarioConfig& config, const WorldState& state, int cycle);

/// Full run: per cycle step the world, observe under the scan policy, advance
/// each tracked belief (predict always, update when observed) and score both
/// estimators against ground truth. Deterministic given config.seed.
TraceReport run_scenario(const ScenarioConfig& config);

/// run_scenario over seeds config.seed .. config.seed + n_seeds - 1 plus
/// pooled statistics and the per-distance-band breakdown.
BenchmarkResult accuracy_benchmark(const ScenarioConfig& config, std::uint32_t n_seeds);

}  // namespace sectrack

#endif  // SECTRACK_SIM_HPP_

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

#include "sectrack/sim.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace sectrack {

WorldState init_world(const ScenarioConfig& config) {
  WorldState state;
  state.objects.reserve(config.objects.size());
  for (const auto& spec : config.objects) {
    ObjectState obj;
    obj.position = spec.position;
    obj.velocity = spec.kind == ObjectKind::ball ? spec.velocity : Point2{};
    state.objects.push_back(obj);
  }
  return state;
}

namespace {

void clamp_to_field(const ScenarioConfig& config, Point2& pos, Point2& vel) {
  bool hit = false;
  if (pos.x < -config.field_half_x) { pos.x = -config.field_half_x; hit = true; }
  if (pos.x > config.field_half_x) { pos.x = config.field_half_x; hit = true; }
  if (pos.y < -config.field_half_y) { pos.y = -config.field_half_y; hit = true; }
  if (pos.y > config.field_half_y) { pos.y = config.field_half_y; hit = true; }
  if (hit) vel = {0.0, 0.0};
}

void step_ball(const ScenarioConfig& config, const ObjectSpec& spec, ObjectState& obj,
               int cycle) {
  obj.position = obj.position + obj.velocity;
  obj.velocity = obj.velocity * config.ball_params.ball_decay;
  for (const auto& kick : spec.kicks) {
    if (kick.cycle == cycle) {
      obj.velocity = unit_vector(kick.direction) * std::min(kick.speed, kBallSpeedMax);
    }
  }
  clamp_to_field(config, obj.position, obj.velocity);
}

void step_waypoint_player(const ObjectSpec& spec, ObjectState& obj) {
  const auto& points = spec.motion.points;
  double remaining = spec.motion.speed > 0.0 ? spec.motion.speed
                                             : player_type(spec.type_id).max_speed;
  for (std::size_t hops = 0; hops <= points.size() && remaining > 1e-12; ++hops) {
    const Point2 target = points[obj.waypoint % points.size()];
    const Point2 to_target = target - obj.position;
    const double dist = to_target.norm();
    if (dist <= remaining) {
      obj.position = target;
      remaining -= dist;
      obj.waypoint = (obj.waypoint + 1) % points.size();
      if (points.size() == 1) break;  // single waypoint: arrive and stop
    } else {
      obj.position = obj.position + to_target * (remaining / dist);
      remaining = 0.0;
    }
  }
}

void step_walk_player(const ObjectSpec& spec, ObjectState& obj, Rng& rng) {
  // Draw unconditionally so the stream layout does not depend on max_step.
  const double dir = rng.uniform(0.0, 2.0 * kPi);
  const double len = rng.uniform(0.0, spec.motion.max_step);
  obj.position = obj.position + unit_vector(dir) * len;
}

}  // namespace

void step_world(WorldState& state, const ScenarioConfig& config, Rng& rng) {
  const int cycle = state.cycle + 1;
  for (std::size_t i = 0; i < config.objects.size(); ++i) {
    const ObjectSpec& spec = config.objects[i];
    ObjectState& obj = state.objects[i];
    if (spec.kind == ObjectKind::ball) {
      step_ball(config, spec, obj, cycle);
    } else {
      if (spec.motion.kind == MotionModel::Kind::waypoints) {
        step_waypoint_player(spec, obj);
      } else {
        step_walk_player(spec, obj, rng);
      }
      Point2 no_vel;
      clamp_to_field(config, obj.position, no_vel);
    }
  }
  state.cycle = cycle;
}

double scan_body_angle(const ScenarioConfig& config, const WorldState& state, int cycle) {
  switch (config.scan_policy.kind) {
    case ScanPolicy::Kind::fixed:
      return config.observer.body_angle;
    case ScanPolicy::Kind::rotating: {
      const int steps = (cycle - 1) / std::max(1, config.scan_policy.period);
      return normalize_rad(config.observer.body_angle +
                           deg2rad(config.scan_policy.step_deg) * steps);
    }
    case ScanPolicy::Kind::track_object: {
      for (std::size_t i = 0; i < config.objects.size(); ++i) {
        if (config.objects[i].id == config.scan_policy.target_id) {
          const Point2 rel = state.objects[i].position - config.observer.position;
          return std::atan2(rel.y, rel.x);
        }
      }
      fail(ErrorCode::config_invalid, "scan_policy.target_id does not name an object");
    }
  }
  return config.observer.body_angle;
}

namespace {

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

double median_of(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

RunSummary summarize(const std::vector<TraceRow>& rows) {
  RunSummary summary;
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> per_object;
  std::vector<double> all_baseline, all_denoised;
  std::uint64_t belief_rows = 0, sound_rows = 0;
  for (const auto& row : rows) {
    if (row.has_belief) {
      ++belief_rows;
      if (row.sound) ++sound_rows;
    }
    if (row.was_reset) ++summary.reset_count;
    if (!std::isnan(row.baseline_err) && !std::isnan(row.denoised_err)) {
      auto& [base, deno] = per_object[row.object_id];
      base.push_back(row.baseline_err);
      deno.push_back(row.denoised_err);
      all_baseline.push_back(row.baseline_err);
      all_denoised.push_back(row.denoised_err);
    }
  }
  for (auto& [id, errs] : per_object) {
    ObjectStats stats;
    stats.scored = errs.first.size();
    stats.mean_baseline = mean_of(errs.first);
    stats.median_baseline = median_of(errs.first);
    stats.mean_denoised = mean_of(errs.second);
    stats.median_denoised = median_of(errs.second);
    stats.improvement = stats.mean_baseline - stats.mean_denoised;
    summary.per_object.emplace_back(id, stats);
  }
  summary.rows_scored = all_baseline.size();
  summary.mean_baseline = mean_of(all_baseline);
  summary.mean_denoised = mean_of(all_denoised);
  summary.improvement_m = summary.mean_baseline - summary.mean_denoised;
  summary.soundness_rate =
      belief_rows ? static_cast<double>(sound_rows) / static_cast<double>(belief_rows) : 1.0;
  return summary;
}

}  // namespace

TraceReport run_scenario(const ScenarioConfig& config) {
  validate(config);
  WorldState world = init_world(config);
  Rng rng(config.seed);

  const std::size_t n = config.objects.size();
  std::vector<std::optional<Belief>> beliefs(n);
  std::vector<std::optional<Point2>> last_baseline(n);
  std::vector<MaxMoveTable> tables(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (config.objects[i].kind == ObjectKind::player) {
      tables[i] = build_max_move_table(player_type(config.objects[i].type_id), 1);
    }
  }

  TraceReport report;
  report.seed = config.seed;
  report.rows.reserve(static_cast<std::size_t>(config.cycles) * n);

  for (int cycle = 1; cycle <= config.cycles; ++cycle) {
    step_world(world, config, rng);
    ObserverPose pose = config.observer;
    pose.body_angle = scan_body_angle(config, world, cycle);

    for (std::size_t i = 0; i < n; ++i) {
      const ObjectSpec& spec = config.objects[i];
      const Point2 true_pos = world.objects[i].position;
      const std::optional<Point2> true_vel =
          spec.kind == ObjectKind::ball ? std::optional<Point2>(world.objects[i].velocity)
                                        : std::nullopt;
      const std::optional<Observation> obs =
          observe(pose, true_pos, true_vel, config.quantizer, config.vel_noise, rng, cycle);

      if (beliefs[i]) {
        beliefs[i] = spec.kind == ObjectKind::ball
                         ? predict_ball(*beliefs[i], config.ball_params)
                         : predict_player(*beliefs[i], tables[i]);
      }
      if (obs) {
        const Sector sector = observation_sector(*obs, config.quantizer);
        if (beliefs[i]) {
          beliefs[i] = update(*beliefs[i], sector, obs->velocity_reading, config.vel_noise);
        } else {
          beliefs[i] = init_belief(spec.kind, spec.type_id, sector, obs->velocity_reading,
                                   config.vel_noise);
        }
        last_baseline[i] = baseline_estimate(*obs);
      }

      TraceRow row;
      row.seed = config.seed;
      row.cycle = cycle;
      row.object_id = spec.id;
      row.observed = obs.has_value();
      row.true_pos = true_pos;
      row.observer_distance = distance(true_pos, config.observer.position);
      if (beliefs[i]) {
        row.has_belief = true;
        row.estimate = estimate(*beliefs[i], config.estimator_mode);
        row.denoised_err = distance(*row.estimate, true_pos);
        row.region_area = beliefs[i]->region.area();
        row.sound = beliefs[i]->region.contains(true_pos);
        row.was_reset = obs.has_value() && beliefs[i]->was_reset;
      }
      if (last_baseline[i]) {
        row.baseline_pos = last_baseline[i];
        row.baseline_err = distance(*last_baseline[i], true_pos);
      }
      report.rows.push_back(std::move(row));
    }
  }

  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const TraceRow& a, const TraceRow& b) {
                     if (a.cycle != b.cycle) return a.cycle < b.cycle;
                     return a.object_id < b.object_id;
                   });
  report.summary = summarize(report.rows);
  return report;
}

BenchmarkResult accuracy_benchmark(const ScenarioConfig& config, std::uint32_t n_seeds) {
  if (n_seeds < 1) fail(ErrorCode::constraint_violation, "accuracy_benchmark: n_seeds < 1");
  validate(config);

  BenchmarkResult result;
  result.base_seed = config.seed;
  result.n_seeds = n_seeds;
  result.runs.reserve(n_seeds);

  std::vector<double> improvements;
  std::vector<TraceRow> pooled;
  for (std::uint32_t s = 0; s < n_seeds; ++s) {
    ScenarioConfig run_config = config;
    run_config.seed = config.seed + s;
    TraceReport run = run_scenario(run_config);
    if (!std::isnan(run.summary.improvement_m)) {
      improvements.push_back(run.summary.improvement_m);
    }
    result.min_soundness_rate = std::min(result.min_soundness_rate, run.summary.soundness_rate);
    result.total_resets += run.summary.reset_count;
    pooled.insert(pooled.end(), run.rows.begin(), run.rows.end());
    result.runs.push_back(std::move(run));
  }

  result.combined = summarize(pooled);
  if (!improvements.empty()) {
    double mean = 0.0;
    for (double v : improvements) mean += v;
    mean /= static_cast<double>(improvements.size());
    double var = 0.0;
    for (double v : improvements) var += (v - mean) * (v - mean);
    var /= static_cast<double>(improvements.size());
    result.mean_improvement_m = mean;
    result.stddev_improvement_m = std::sqrt(var);
  }

  std::array<std::vector<double>, kBandCount> band_baseline, band_denoised;
  for (const auto& row : pooled) {
    if (std::isnan(row.baseline_err) || std::isnan(row.denoised_err)) continue;
    const std::size_t band = band_index(row.observer_distance);
    band_baseline[band].push_back(row.baseline_err);
    band_denoised[band].push_back(row.denoised_err);
  }
  for (std::size_t band = 0; band < kBandCount; ++band) {
    BandStats stats;
    stats.rows = band_baseline[band].size();
    stats.mean_baseline = mean_of(band_baseline[band]);
    stats.mean_denoised = mean_of(band_denoised[band]);
    stats.improvement = stats.mean_baseline - stats.mean_denoised;
    result.bands[band] = stats;
  }
  return result;
}

}  // namespace sectrack

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

#include "sectrack/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sectrack {

namespace {

using nlohmann::json;

class Problems {
 public:
  void add(const std::string& path, const std::string& what) {
    items_.push_back(path + ": " + what);
  }
  bool empty() const { return items_.empty(); }
  [[noreturn]] void raise() const {
    std::string joined;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) joined += "; ";
      joined += items_[i];
    }
    fail(ErrorCode::config_invalid, joined);
  }
  void raise_if_any() const {
    if (!empty()) raise();
  }

 private:
  std::vector<std::string> items_;
};

void check_keys(const json& j, const std::string& path,
                const std::set<std::string>& allowed, Problems& problems) {
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) {
      problems.add(path.empty() ? item.key() : path + "." + item.key(), "unknown key");
    }
  }
}

double get_number(const json& j, const std::string& path, const char* key,
                  double fallback, Problems& problems) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) {
    problems.add(path + key, "expected a number");
    return fallback;
  }
  return j[key].get<double>();
}

std::int64_t get_integer(const json& j, const std::string& path, const char* key,
                         std::int64_t fallback, Problems& problems) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) {
    problems.add(path + key, "expected an integer");
    return fallback;
  }
  return j[key].get<std::int64_t>();
}

std::string get_string(const json& j, const std::string& path, const char* key,
                       const std::string& fallback, Problems& problems) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_string()) {
    problems.add(path + key, "expected a string");
    return fallback;
  }
  return j[key].get<std::string>();
}

Point2 get_point(const json& j, const std::string& path, const char* key,
                 Point2 fallback, Problems& problems) {
  if (!j.contains(key)) return fallback;
  const json& p = j[key];
  if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
    problems.add(path + key, "expected [x, y]");
    return fallback;
  }
  return {p[0].get<double>(), p[1].get<double>()};
}

ScanPolicy parse_scan_policy(const json& j, const std::string& path, Problems& problems) {
  ScanPolicy policy;
  if (!j.is_object()) {
    problems.add(path, "expected an object");
    return policy;
  }
  check_keys(j, path, {"kind", "period", "step_deg", "target_id"}, problems);
  const std::string kind = get_string(j, path + ".", "kind", "fixed", problems);
  if (kind == "fixed") {
    policy.kind = ScanPolicy::Kind::fixed;
  } else if (kind == "rotating") {
    policy.kind = ScanPolicy::Kind::rotating;
  } else if (kind == "track_object") {
    policy.kind = ScanPolicy::Kind::track_object;
  } else {
    problems.add(path + ".kind", "must be fixed, rotating or track_object");
  }
  policy.period = static_cast<int>(get_integer(j, path + ".", "period", 1, problems));
  policy.step_deg = get_number(j, path + ".", "step_deg", 0.0, problems);
  policy.target_id = get_string(j, path + ".", "target_id", "", problems);
  return policy;
}

MotionModel parse_motion(const json& j, const std::string& path, Problems& problems) {
  MotionModel motion;
  if (!j.is_object()) {
    problems.add(path, "expected an object");
    return motion;
  }
  check_keys(j, path, {"kind", "max_step", "speed", "points"}, problems);
  const std::string kind = get_string(j, path + ".", "kind", "random_walk", problems);
  if (kind == "random_walk") {
    motion.kind = MotionModel::Kind::random_walk;
  } else if (kind == "waypoints") {
    motion.kind = MotionModel::Kind::waypoints;
  } else {
    problems.add(path + ".kind", "must be waypoints or random_walk");
  }
  motion.max_step = get_number(j, path + ".", "max_step", 0.0, problems);
  motion.speed = get_number(j, path + ".", "speed", 0.0, problems);
  if (j.contains("points")) {
    if (!j["points"].is_array()) {
      problems.add(path + ".points", "expected an array of [x, y]");
    } else {
      for (std::size_t i = 0; i < j["points"].size(); ++i) {
        const json& p = j["points"][i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
          problems.add(path + ".points[" + std::to_string(i) + "]", "expected [x, y]");
          continue;
        }
        motion.points.push_back({p[0].get<double>(), p[1].get<double>()});
      }
    }
  }
  return motion;
}

ObjectSpec parse_object(const json& j, const std::string& path, Problems& problems) {
  ObjectSpec spec;
  if (!j.is_object()) {
    problems.add(path, "expected an object");
    return spec;
  }
  check_keys(j, path, {"id", "kind", "type_id", "position", "velocity", "kicks", "motion"},
             problems);
  spec.id = get_string(j, path + ".", "id", "", problems);
  const std::string kind = get_string(j, path + ".", "kind", "player", problems);
  if (kind == "ball") {
    spec.kind = ObjectKind::ball;
  } else if (kind == "player") {
    spec.kind = ObjectKind::player;
  } else {
    problems.add(path + ".kind", "must be ball or player");
  }
  spec.type_id = static_cast<int>(get_integer(j, path + ".", "type_id", 0, problems));
  spec.position = get_point(j, path + ".", "position", {}, problems);
  spec.velocity = get_point(j, path + ".", "velocity", {}, problems);
  if (j.contains("kicks")) {
    if (spec.kind != ObjectKind::ball) problems.add(path + ".kicks", "only valid for the ball");
    if (!j["kicks"].is_array()) {
      problems.add(path + ".kicks", "expected an array");
    } else {
      for (std::size_t i = 0; i < j["kicks"].size(); ++i) {
        const std::string kpath = path + ".kicks[" + std::to_string(i) + "]";
        const json& k = j["kicks"][i];
        if (!k.is_object()) {
          problems.add(kpath, "expected an object");
          continue;
        }
        check_keys(k, kpath, {"cycle", "speed", "direction"}, problems);
        KickEvent kick;
        kick.cycle = static_cast<int>(get_integer(k, kpath + ".", "cycle", 0, problems));
        kick.speed = get_number(k, kpath + ".", "speed", 0.0, problems);
        kick.direction = get_number(k, kpath + ".", "direction", 0.0, problems);
        spec.kicks.push_back(kick);
      }
    }
  }
  if (j.contains("motion")) {
    if (spec.kind != ObjectKind::player) problems.add(path + ".motion", "only valid for players");
    spec.motion = parse_motion(j["motion"], path + ".motion", problems);
  }
  return spec;
}

}  // namespace

EstimatorMode parse_estimator_mode(const std::string& name) {
  if (name == "centroid") return EstimatorMode::centroid;
  if (name == "bbox_midpoint" || name == "bbox") return EstimatorMode::bbox_midpoint;
  fail(ErrorCode::config_invalid,
       "estimator_mode: must be centroid or bbox_midpoint (got '" + name + "')");
}

std::string estimator_mode_name(EstimatorMode mode) {
  return mode == EstimatorMode::centroid ? "centroid" : "bbox_midpoint";
}

ScenarioConfig parse_scenario(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::config_invalid, std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::config_invalid, "top level: expected an object");

  Problems problems;
  check_keys(j, "",
             {"cycles", "seed", "field_half_x", "field_half_y", "observer", "objects",
              "quantizer", "vel_noise", "ball_params", "estimator_mode"},
             problems);

  ScenarioConfig config;
  config.cycles = static_cast<int>(get_integer(j, "", "cycles", 1, problems));
  config.seed = static_cast<std::uint64_t>(get_integer(j, "", "seed", 42, problems));
  config.field_half_x = get_number(j, "", "field_half_x", 52.5, problems);
  config.field_half_y = get_number(j, "", "field_half_y", 34.0, problems);

  if (j.contains("observer")) {
    const json& o = j["observer"];
    if (!o.is_object()) {
      problems.add("observer", "expected an object");
    } else {
      check_keys(o, "observer", {"position", "body_angle", "view_half_width", "scan_policy"},
                 problems);
      config.observer.position = get_point(o, "observer.", "position", {}, problems);
      config.observer.body_angle = get_number(o, "observer.", "body_angle", 0.0, problems);
      config.observer.view_half_width =
          get_number(o, "observer.", "view_half_width", kPi / 4.0, problems);
      if (o.contains("scan_policy")) {
        config.scan_policy = parse_scan_policy(o["scan_policy"], "observer.scan_policy", problems);
      }
    }
  }

  if (j.contains("objects")) {
    if (!j["objects"].is_array()) {
      problems.add("objects", "expected an array");
    } else {
      for (std::size_t i = 0; i < j["objects"].size(); ++i) {
        config.objects.push_back(
            parse_object(j["objects"][i], "objects[" + std::to_string(i) + "]", problems));
      }
    }
  }

  if (j.contains("quantizer")) {
    const json& q = j["quantizer"];
    if (!q.is_object()) {
      problems.add("quantizer", "expected an object");
    } else {
      check_keys(q, "quantizer", {"inner_step", "outer_step", "eps"}, problems);
      config.quantizer.inner_step = get_number(q, "quantizer.", "inner_step", 0.1, problems);
      config.quantizer.outer_step = get_number(q, "quantizer.", "outer_step", 0.1, problems);
      config.quantizer.eps = get_number(q, "quantizer.", "eps", 1e-6, problems);
    }
  }

  if (j.contains("vel_noise")) {
    const json& v = j["vel_noise"];
    if (!v.is_object()) {
      problems.add("vel_noise", "expected an object");
    } else {
      check_keys(v, "vel_noise", {"speed_eps", "dir_eps", "visibility_range"}, problems);
      config.vel_noise.speed_eps = get_number(v, "vel_noise.", "speed_eps", 0.1, problems);
      config.vel_noise.dir_eps = get_number(v, "vel_noise.", "dir_eps", deg2rad(5.0), problems);
      config.vel_noise.visibility_range =
          get_number(v, "vel_noise.", "visibility_range", 30.0, problems);
    }
  }

  if (j.contains("ball_params")) {
    const json& b = j["ball_params"];
    if (!b.is_object()) {
      problems.add("ball_params", "expected an object");
    } else {
      check_keys(b, "ball_params",
                 {"ball_decay", "dir_inflation", "speed_inflation", "fallback_reach"}, problems);
      config.ball_params.ball_decay = get_number(b, "ball_params.", "ball_decay", 0.94, problems);
      config.ball_params.dir_inflation =
          get_number(b, "ball_params.", "dir_inflation", deg2rad(1.0), problems);
      config.ball_params.speed_inflation =
          get_number(b, "ball_params.", "speed_inflation", 0.05, problems);
      config.ball_params.fallback_reach =
          get_number(b, "ball_params.", "fallback_reach", 3.0, problems);
    }
  }

  if (j.contains("estimator_mode")) {
    const std::string mode = get_string(j, "", "estimator_mode", "centroid", problems);
    if (mode == "centroid") {
      config.estimator_mode = EstimatorMode::centroid;
    } else if (mode == "bbox_midpoint") {
      config.estimator_mode = EstimatorMode::bbox_midpoint;
    } else {
      problems.add("estimator_mode", "must be centroid or bbox_midpoint");
    }
  }

  problems.raise_if_any();
  validate(config);
  return config;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io_error, "cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(ErrorCode::io_error, "failed reading scenario file '" + path + "'");
  return parse_scenario(buf.str());
}

void validate(const ScenarioConfig& config) {
  Problems problems;
  if (config.cycles < 1) problems.add("cycles", "must be >= 1");
  if (!(config.field_half_x > 0.0)) problems.add("field_half_x", "must be > 0");
  if (!(config.field_half_y > 0.0)) problems.add("field_half_y", "must be > 0");
  if (!config.observer.position.finite()) problems.add("observer.position", "must be finite");
  if (!(config.observer.view_half_width > 0.0) || config.observer.view_half_width > kPi) {
    problems.add("observer.view_half_width", "must be in (0, pi]");
  }
  if (!std::isfinite(config.observer.body_angle)) {
    problems.add("observer.body_angle", "must be finite");
  }
  if (config.scan_policy.kind == ScanPolicy::Kind::rotating && config.scan_policy.period < 1) {
    problems.add("observer.scan_policy.period", "must be >= 1");
  }
  if (config.scan_policy.kind == ScanPolicy::Kind::track_object) {
    bool found = false;
    for (const auto& obj : config.objects) found = found || obj.id == config.scan_policy.target_id;
    if (!found) problems.add("observer.scan_policy.target_id", "does not name an object");
  }

  if (config.objects.empty()) problems.add("objects", "must not be empty");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < config.objects.size(); ++i) {
    const auto& obj = config.objects[i];
    const std::string path = "objects[" + std::to_string(i) + "]";
    if (obj.id.empty()) problems.add(path + ".id", "must not be empty");
    if (!ids.insert(obj.id).second) problems.add(path + ".id", "duplicate id '" + obj.id + "'");
    if (!obj.position.finite() || std::abs(obj.position.x) > config.field_half_x ||
        std::abs(obj.position.y) > config.field_half_y) {
      problems.add(path + ".position", "must lie within the field");
    }
    if (obj.kind == ObjectKind::ball) {
      if (obj.velocity.norm() > kBallSpeedMax + 1e-9) {
        problems.add(path + ".velocity", "ball speed must be <= 3.0 m/cycle");
      }
      for (std::size_t k = 0; k < obj.kicks.size(); ++k) {
        const auto& kick = obj.kicks[k];
        const std::string kpath = path + ".kicks[" + std::to_string(k) + "]";
        if (kick.cycle < 1 || kick.cycle > config.cycles) {
          problems.add(kpath + ".cycle", "must be within [1, cycles]");
        }
        if (kick.speed < 0.0 || kick.speed > kBallSpeedMax + 1e-9) {
          problems.add(kpath + ".speed", "must be within [0, 3.0]");
        }
      }
    } else {
      if (!player_type_known(obj.type_id)) {
        problems.add(path + ".type_id", "unknown player type " + std::to_string(obj.type_id));
      } else {
        const PlayerTypeSpec type = player_type(obj.type_id);
        if (obj.motion.kind == MotionModel::Kind::random_walk) {
          if (obj.motion.max_step < 0.0 || obj.motion.max_step > type.max_speed) {
            problems.add(path + ".motion.max_step", "must be within [0, type max_speed]");
          }
        } else {
          if (obj.motion.points.empty()) {
            problems.add(path + ".motion.points", "waypoints need at least one point");
          }
          if (obj.motion.speed < 0.0 || obj.motion.speed > type.max_speed) {
            problems.add(path + ".motion.speed", "must be within [0, type max_speed]");
          }
          for (std::size_t w = 0; w < obj.motion.points.size(); ++w) {
            const Point2 p = obj.motion.points[w];
            if (!p.finite() || std::abs(p.x) > config.field_half_x ||
                std::abs(p.y) > config.field_half_y) {
              problems.add(path + ".motion.points[" + std::to_string(w) + "]",
                           "must lie within the field");
            }
          }
        }
      }
    }
  }

  if (!(config.quantizer.inner_step > 0.0)) problems.add("quantizer.inner_step", "must be > 0");
  if (!(config.quantizer.outer_step > 0.0)) problems.add("quantizer.outer_step", "must be > 0");
  if (!(config.quantizer.eps > 0.0)) problems.add("quantizer.eps", "must be > 0");
  if (config.vel_noise.speed_eps < 0.0 || config.vel_noise.speed_eps >= 1.0) {
    problems.add("vel_noise.speed_eps", "must be in [0, 1)");
  }
  if (config.vel_noise.dir_eps < 0.0 || config.vel_noise.dir_eps > kPi / 4.0) {
    problems.add("vel_noise.dir_eps", "must be in [0, pi/4]");
  }
  if (config.vel_noise.visibility_range < 0.0) {
    problems.add("vel_noise.visibility_range", "must be >= 0");
  }
  if (!(config.ball_params.ball_decay > 0.0) || config.ball_params.ball_decay >= 1.0) {
    problems.add("ball_params.ball_decay", "must be in (0, 1)");
  }
  if (config.ball_params.dir_inflation < 0.0) {
    problems.add("ball_params.dir_inflation", "must be >= 0");
  }
  if (config.ball_params.speed_inflation < 0.0) {
    problems.add("ball_params.speed_inflation", "must be >= 0");
  }
  if (config.ball_params.fallback_reach < 0.0) {
    problems.add("ball_params.fallback_reach", "must be >= 0");
  }
  problems.raise_if_any();
}

std::string scenario_to_json(const ScenarioConfig& config) {
  json j;
  j["cycles"] = config.cycles;
  j["seed"] = config.seed;
  j["field_half_x"] = config.field_half_x;
  j["field_half_y"] = config.field_half_y;
  json obs;
  obs["position"] = {config.observer.position.x, config.observer.position.y};
  obs["body_angle"] = config.observer.body_angle;
  obs["view_half_width"] = config.observer.view_half_width;
  json policy;
  switch (config.scan_policy.kind) {
    case ScanPolicy::Kind::fixed:
      policy["kind"] = "fixed";
      break;
    case ScanPolicy::Kind::rotating:
      policy["kind"] = "rotating";
      policy["period"] = config.scan_policy.period;
      policy["step_deg"] = config.scan_policy.step_deg;
      break;
    case ScanPolicy::Kind::track_object:
      policy["kind"] = "track_object";
      policy["target_id"] = config.scan_policy.target_id;
      break;
  }
  obs["scan_policy"] = policy;
  j["observer"] = obs;

  j["objects"] = json::array();
  for (const auto& obj : config.objects) {
    json o;
    o["id"] = obj.id;
    o["position"] = {obj.position.x, obj.position.y};
    if (obj.kind == ObjectKind::ball) {
      o["kind"] = "ball";
      o["velocity"] = {obj.velocity.x, obj.velocity.y};
      o["kicks"] = json::array();
      for (const auto& kick : obj.kicks) {
        o["kicks"].push_back(
            {{"cycle", kick.cycle}, {"speed", kick.speed}, {"direction", kick.direction}});
      }
    } else {
      o["kind"] = "player";
      o["type_id"] = obj.type_id;
      json m;
      if (obj.motion.kind == MotionModel::Kind::random_walk) {
        m["kind"] = "random_walk";
        m["max_step"] = obj.motion.max_step;
      } else {
        m["kind"] = "waypoints";
        m["speed"] = obj.motion.speed;
        m["points"] = json::array();
        for (Point2 p : obj.motion.points) m["points"].push_back({p.x, p.y});
      }
      o["motion"] = m;
    }
    j["objects"].push_back(o);
  }

  j["quantizer"] = {{"inner_step", config.quantizer.inner_step},
                    {"outer_step", config.quantizer.outer_step},
                    {"eps", config.quantizer.eps}};
  j["vel_noise"] = {{"speed_eps", config.vel_noise.speed_eps},
                    {"dir_eps", config.vel_noise.dir_eps},
                    {"visibility_range", config.vel_noise.visibility_range}};
  j["ball_params"] = {{"ball_decay", config.ball_params.ball_decay},
                      {"dir_inflation", config.ball_params.dir_inflation},
                      {"speed_inflation", config.ball_params.speed_inflation},
                      {"fallback_reach", config.ball_params.fallback_reach}};
  j["estimator_mode"] = estimator_mode_name(config.estimator_mode);
  return j.dump(2) + "\n";
}

}  // namespace sectrack

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

#include "sectrack.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "sectrack/demo.hpp"
#include "sectrack/scenario.hpp"
#include "sectrack/sim.hpp"

struct sectrack_scenario {
  sectrack::ScenarioConfig config;
};

struct sectrack_report {
  sectrack::BenchmarkResult result;
};

struct sectrack_demo {
  sectrack::DemoResult demo;
};

namespace {

thread_local std::string g_last_error;

sectrack_status to_status(sectrack::ErrorCode code) {
  using sectrack::ErrorCode;
  switch (code) {
    case ErrorCode::constraint_violation: return SECTRACK_ERR_INVALID_ARGUMENT;
    case ErrorCode::empty_region: return SECTRACK_ERR_EMPTY_REGION;
    case ErrorCode::no_preimage: return SECTRACK_ERR_NO_PREIMAGE;
    case ErrorCode::kind_mismatch: return SECTRACK_ERR_KIND_MISMATCH;
    case ErrorCode::config_invalid: return SECTRACK_ERR_CONFIG;
    case ErrorCode::io_error: return SECTRACK_ERR_IO;
  }
  return SECTRACK_ERR_INTERNAL;
}

// Run `fn` translating exceptions into status codes + last_error.
template <typename Fn>
sectrack_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SECTRACK_OK;
  } catch (const sectrack::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SECTRACK_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SECTRACK_ERR_INTERNAL;
  }
}

sectrack_status require(bool ok, const char* message) {
  if (ok) return SECTRACK_OK;
  g_last_error = message;
  return SECTRACK_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* sectrack_version(void) { return "1.0.0"; }

const char* sectrack_last_error(void) { return g_last_error.c_str(); }

sectrack_status sectrack_scenario_parse(const char* json_text, sectrack_scenario** out) {
  if (auto st = require(json_text && out, "json_text and out must be non-null")) return st;
  return guarded([&] {
    auto handle = std::make_unique<sectrack_scenario>();
    handle->config = sectrack::parse_scenario(json_text);
    *out = handle.release();
  });
}

sectrack_status sectrack_scenario_load(const char* path, sectrack_scenario** out) {
  if (auto st = require(path && out, "path and out must be non-null")) return st;
  return guarded([&] {
    auto handle = std::make_unique<sectrack_scenario>();
    handle->config = sectrack::load_scenario(path);
    *out = handle.release();
  });
}

sectrack_status sectrack_scenario_set_estimator(sectrack_scenario* scenario, const char* mode) {
  if (auto st = require(scenario && mode, "scenario and mode must be non-null")) return st;
  return guarded([&] {
    scenario->config.estimator_mode = sectrack::parse_estimator_mode(mode);
  });
}

void sectrack_scenario_free(sectrack_scenario* scenario) { delete scenario; }

sectrack_status sectrack_run(const sectrack_scenario* scenario, uint64_t base_seed,
                             uint32_t n_seeds, sectrack_report** out) {
  if (auto st = require(scenario && out, "scenario and out must be non-null")) return st;
  if (auto st = require(n_seeds >= 1, "n_seeds must be >= 1")) return st;
  return guarded([&] {
    sectrack::ScenarioConfig config = scenario->config;
    config.seed = base_seed;
    auto handle = std::make_unique<sectrack_report>();
    handle->result = sectrack::accuracy_benchmark(config, n_seeds);
    *out = handle.release();
  });
}

sectrack_status sectrack_report_csv(const sectrack_report* report, char** out_text) {
  if (auto st = require(report && out_text, "report and out_text must be non-null")) return st;
  return guarded([&] { *out_text = copy_string(sectrack::report_to_csv(report->result)); });
}

sectrack_status sectrack_report_json(const sectrack_report* report, char** out_text) {
  if (auto st = require(report && out_text, "report and out_text must be non-null")) return st;
  return guarded([&] { *out_text = copy_string(sectrack::report_to_json(report->result)); });
}

sectrack_status sectrack_report_stats(const sectrack_report* report, sectrack_stats* out) {
  if (auto st = require(report && out, "report and out must be non-null")) return st;
  return guarded([&] {
    const sectrack::BenchmarkResult& r = report->result;
    sectrack_stats stats{};
    std::uint64_t rows = 0;
    for (const auto& run : r.runs) rows += run.rows.size();
    stats.rows = rows;
    stats.rows_scored = r.combined.rows_scored;
    stats.mean_baseline_m = r.combined.mean_baseline;
    stats.mean_denoised_m = r.combined.mean_denoised;
    stats.improvement_m = r.combined.improvement_m;
    stats.mean_improvement_m = r.mean_improvement_m;
    stats.improvement_stddev_m = r.stddev_improvement_m;
    stats.min_soundness_rate = r.min_soundness_rate;
    stats.reset_count = r.total_resets;
    for (std::size_t band = 0; band < sectrack::kBandCount; ++band) {
      stats.band_rows[band] = r.bands[band].rows;
      stats.band_baseline_m[band] = r.bands[band].mean_baseline;
      stats.band_denoised_m[band] = r.bands[band].mean_denoised;
      stats.band_improvement_m[band] = r.bands[band].improvement;
    }
    *out = stats;
  });
}

void sectrack_report_free(sectrack_report* report) { delete report; }

sectrack_status sectrack_demo_run(sectrack_demo** out) {
  if (auto st = require(out != nullptr, "out must be non-null")) return st;
  return guarded([&] {
    auto handle = std::make_unique<sectrack_demo>();
    handle->demo = sectrack::two_cycle_demo();
    *out = handle.release();
  });
}

sectrack_status sectrack_demo_json(const sectrack_demo* demo, char** out_text) {
  if (auto st = require(demo && out_text, "demo and out_text must be non-null")) return st;
  return guarded([&] { *out_text = copy_string(sectrack::demo_to_json(demo->demo)); });
}

sectrack_status sectrack_demo_svg(const sectrack_demo* demo, char** out_text) {
  if (auto st = require(demo && out_text, "demo and out_text must be non-null")) return st;
  return guarded([&] { *out_text = copy_string(sectrack::demo_to_svg(demo->demo)); });
}

void sectrack_demo_free(sectrack_demo* demo) { delete demo; }

sectrack_status sectrack_table(int type_id, uint32_t horizon, double* speeds,
                               double* cumulative) {
  return guarded([&] {
    const sectrack::MaxMoveTable table =
        sectrack::build_max_move_table(sectrack::player_type(type_id),
                                       static_cast<int>(horizon));
    if (speeds) {
      for (uint32_t n = 0; n < horizon; ++n) speeds[n] = table.speeds[n];
    }
    if (cumulative) {
      for (uint32_t n = 0; n <= horizon; ++n) cumulative[n] = table.cumulative[n];
    }
  });
}

void sectrack_string_free(char* text) { delete[] text; }

}  // extern "C"

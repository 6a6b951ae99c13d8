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

#ifndef SECTRACK_REPORT_HPP_
#define SECTRACK_REPORT_HPP_

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sectrack/geometry.hpp"

namespace sectrack {

// Distance bands (meters from the observer) used for error breakdowns.
inline constexpr std::array<double, 3> kBandEdges = {10.0, 20.0, 40.0};
inline constexpr std::size_t kBandCount = 4;

std::size_t band_index(double observer_distance);
std::string band_label(std::size_t band);

/// One (cycle, object) record. Error fields are NaN until the object has
/// been sighted for the first time; after that the baseline holds its last
/// estimate on unobserved cycles so both errors exist every cycle.
struct TraceRow {
  std::uint64_t seed = 0;
  int cycle = 0;
  std::string object_id;
  bool observed = false;
  double baseline_err = std::numeric_limits<double>::quiet_NaN();
  double denoised_err = std::numeric_limits<double>::quiet_NaN();
  double region_area = std::numeric_limits<double>::quiet_NaN();
  bool was_reset = false;
  Point2 true_pos;
  std::optional<Point2> estimate;
  std::optional<Point2> baseline_pos;
  bool sound = true;               // true position inside the belief region
  bool has_belief = false;
  double observer_distance = 0.0;  // meters, observer to true position
};

struct ObjectStats {
  std::uint64_t scored = 0;  // rows with both errors defined
  double mean_baseline = std::numeric_limits<double>::quiet_NaN();
  double median_baseline = std::numeric_limits<double>::quiet_NaN();
  double mean_denoised = std::numeric_limits<double>::quiet_NaN();
  double median_denoised = std::numeric_limits<double>::quiet_NaN();
  double improvement = std::numeric_limits<double>::quiet_NaN();
};

struct RunSummary {
  std::vector<std::pair<std::string, ObjectStats>> per_object;
  std::uint64_t rows_scored = 0;
  double mean_baseline = std::numeric_limits<double>::quiet_NaN();
  double mean_denoised = std::numeric_limits<double>::quiet_NaN();
  double improvement_m = std::numeric_limits<double>::quiet_NaN();
  double soundness_rate = 1.0;  // over rows with a belief
  std::uint64_t reset_count = 0;
};

struct TraceReport {
  std::uint64_t seed = 0;
  std::vector<TraceRow> rows;  // cycles x objects, ordered (cycle, object_id)
  RunSummary summary;
};

struct BandStats {
  std::uint64_t rows = 0;
  double mean_baseline = std::numeric_limits<double>::quiet_NaN();
  double mean_denoised = std::numeric_limits<double>::quiet_NaN();
  double improvement = std::numeric_limits<double>::quiet_NaN();
};

/// Aggregate over seeds base_seed .. base_seed + n_seeds - 1.
struct BenchmarkResult {
  std::uint64_t base_seed = 0;
  std::uint32_t n_seeds = 0;
  std::vector<TraceReport> runs;
  RunSummary combined;                       // all rows pooled
  double mean_improvement_m = std::numeric_limits<double>::quiet_NaN();
  double stddev_improvement_m = 0.0;         // across per-seed improvements
  double min_soundness_rate = 1.0;
  std::uint64_t total_resets = 0;
  std::array<BandStats, kBandCount> bands{};
};

/// CSV document: fixed header, one line per row sorted by (seed, cycle,
/// object_id), then a '#'-prefixed summary block. NaN prints as "nan".
std::string report_to_csv(const BenchmarkResult& result);

/// JSON document {"rows": [...], "summary": {...}}; NaN serializes as null.
std::string report_to_json(const BenchmarkResult& result);

/// Doubles in serialized documents carry at most 6 significant decimals.
std::string format_number(double v);

}  // namespace sectrack

#endif  // SECTRACK_REPORT_HPP_

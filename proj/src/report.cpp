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

#include "sectrack/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace sectrack {

std::size_t band_index(double observer_distance) {
  for (std::size_t i = 0; i < kBandEdges.size(); ++i) {
    if (observer_distance < kBandEdges[i]) return i;
  }
  return kBandCount - 1;
}

std::string band_label(std::size_t band) {
  switch (band) {
    case 0: return "[0,10)";
    case 1: return "[10,20)";
    case 2: return "[20,40)";
    default: return "[40,inf)";
  }
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

namespace {

using nlohmann::json;

// Round to the serialized precision so the JSON document carries the same
// 6-significant-digit numbers as the CSV.
json json_number(double v) {
  if (std::isnan(v)) return nullptr;
  return std::strtod(format_number(v).c_str(), nullptr);
}

json json_point(const Point2& p) { return json::array({json_number(p.x), json_number(p.y)}); }

json summary_to_json(const RunSummary& summary) {
  json object_stats = json::object();
  for (const auto& [id, stats] : summary.per_object) {
    object_stats[id] = {{"scored", stats.scored},
                        {"mean_baseline_m", json_number(stats.mean_baseline)},
                        {"median_baseline_m", json_number(stats.median_baseline)},
                        {"mean_denoised_m", json_number(stats.mean_denoised)},
                        {"median_denoised_m", json_number(stats.median_denoised)},
                        {"improvement_m", json_number(stats.improvement)}};
  }
  return {{"objects", object_stats},
          {"rows_scored", summary.rows_scored},
          {"mean_baseline_m", json_number(summary.mean_baseline)},
          {"mean_denoised_m", json_number(summary.mean_denoised)},
          {"improvement_m", json_number(summary.improvement_m)},
          {"soundness_rate", json_number(summary.soundness_rate)},
          {"reset_count", summary.reset_count}};
}

void append_summary_lines(const BenchmarkResult& result, std::ostringstream& out) {
  const RunSummary& s = result.combined;
  for (const auto& [id, stats] : s.per_object) {
    out << "# object=" << id << " scored=" << stats.scored
        << " mean_baseline_m=" << format_number(stats.mean_baseline)
        << " median_baseline_m=" << format_number(stats.median_baseline)
        << " mean_denoised_m=" << format_number(stats.mean_denoised)
        << " median_denoised_m=" << format_number(stats.median_denoised)
        << " improvement_m=" << format_number(stats.improvement) << "\n";
  }
  for (std::size_t band = 0; band < kBandCount; ++band) {
    const BandStats& b = result.bands[band];
    out << "# band=" << band_label(band) << " rows=" << b.rows
        << " mean_baseline_m=" << format_number(b.mean_baseline)
        << " mean_denoised_m=" << format_number(b.mean_denoised)
        << " improvement_m=" << format_number(b.improvement) << "\n";
  }
  out << "# overall seeds=" << result.n_seeds << " base_seed=" << result.base_seed
      << " rows_scored=" << s.rows_scored
      << " mean_baseline_m=" << format_number(s.mean_baseline)
      << " mean_denoised_m=" << format_number(s.mean_denoised)
      << " improvement_m=" << format_number(s.improvement_m)
      << " improvement_stddev_m=" << format_number(result.stddev_improvement_m)
      << " soundness_rate=" << format_number(result.min_soundness_rate)
      << " reset_count=" << result.total_resets << "\n";
}

}  // namespace

std::string report_to_csv(const BenchmarkResult& result) {
  std::ostringstream out;
  out << "seed,cycle,object_id,observed,baseline_err_m,denoised_err_m,region_area_m2,was_reset\n";
  for (const auto& run : result.runs) {
    for (const auto& row : run.rows) {
      out << row.seed << ',' << row.cycle << ',' << row.object_id << ','
          << (row.observed ? 1 : 0) << ',' << format_number(row.baseline_err) << ','
          << format_number(row.denoised_err) << ',' << format_number(row.region_area) << ','
          << (row.was_reset ? 1 : 0) << "\n";
    }
  }
  append_summary_lines(result, out);
  return out.str();
}

std::string report_to_json(const BenchmarkResult& result) {
  json rows = json::array();
  for (const auto& run : result.runs) {
    for (const auto& row : run.rows) {
      json r = {{"seed", row.seed},
                {"cycle", row.cycle},
                {"object_id", row.object_id},
                {"observed", row.observed},
                {"baseline_err_m", json_number(row.baseline_err)},
                {"denoised_err_m", json_number(row.denoised_err)},
                {"region_area_m2", json_number(row.region_area)},
                {"was_reset", row.was_reset},
                {"true_pos", json_point(row.true_pos)},
                {"estimate", row.estimate ? json_point(*row.estimate) : json(nullptr)},
                {"baseline_pos", row.baseline_pos ? json_point(*row.baseline_pos) : json(nullptr)},
                {"sound", row.has_belief ? json(row.sound) : json(nullptr)}};
      rows.push_back(std::move(r));
    }
  }

  json bands = json::array();
  for (std::size_t band = 0; band < kBandCount; ++band) {
    const BandStats& b = result.bands[band];
    bands.push_back({{"band", band_label(band)},
                     {"rows", b.rows},
                     {"mean_baseline_m", json_number(b.mean_baseline)},
                     {"mean_denoised_m", json_number(b.mean_denoised)},
                     {"improvement_m", json_number(b.improvement)}});
  }

  json summary = summary_to_json(result.combined);
  summary["seeds"] = result.n_seeds;
  summary["base_seed"] = result.base_seed;
  summary["mean_improvement_m"] = json_number(result.mean_improvement_m);
  summary["improvement_stddev_m"] = json_number(result.stddev_improvement_m);
  summary["min_soundness_rate"] = json_number(result.min_soundness_rate);
  summary["total_resets"] = result.total_resets;
  summary["bands"] = std::move(bands);

  json doc = {{"rows", std::move(rows)}, {"summary", std::move(summary)}};
  return doc.dump(2) + "\n";
}

}  // namespace sectrack

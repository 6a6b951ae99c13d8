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

// Command-line front end. Talks to the library exclusively through the C API
// in sectrack.h; all analysis lives behind that boundary.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sectrack.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitBadInput = 2;

// Exit code for a failed library call: config/argument problems are usage
// errors (2), IO and internal failures are runtime errors (1).
int exit_code_for(sectrack_status status) {
  switch (status) {
    case SECTRACK_OK:
      return kExitOk;
    case SECTRACK_ERR_IO:
    case SECTRACK_ERR_INTERNAL:
      return kExitRuntime;
    default:
      return kExitBadInput;
  }
}

int report_failure(const char* what, sectrack_status status) {
  std::cerr << "error: " << what << ": " << sectrack_last_error() << "\n";
  return exit_code_for(status);
}

bool write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  out.flush();
  return out.good();
}

struct StringDeleter {
  void operator()(char* p) const { sectrack_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int cmd_run(const std::string& scenario_path, int seeds, std::uint64_t base_seed,
            const std::string& out_path, const std::string& format,
            const std::string& estimator) {
  sectrack_scenario* scenario = nullptr;
  sectrack_status status = sectrack_scenario_load(scenario_path.c_str(), &scenario);
  if (status != SECTRACK_OK) {
    // A missing or invalid scenario file is bad input, not a runtime failure.
    std::cerr << "error: loading scenario: " << sectrack_last_error() << "\n";
    return kExitBadInput;
  }
  std::unique_ptr<sectrack_scenario, decltype(&sectrack_scenario_free)> scenario_guard(
      scenario, &sectrack_scenario_free);

  if (!estimator.empty()) {
    status = sectrack_scenario_set_estimator(scenario, estimator.c_str());
    if (status != SECTRACK_OK) return report_failure("setting estimator", status);
  }

  sectrack_report* report = nullptr;
  status = sectrack_run(scenario, base_seed, static_cast<uint32_t>(seeds), &report);
  if (status != SECTRACK_OK) return report_failure("running scenario", status);
  std::unique_ptr<sectrack_report, decltype(&sectrack_report_free)> report_guard(
      report, &sectrack_report_free);

  char* text = nullptr;
  status = format == "json" ? sectrack_report_json(report, &text)
                            : sectrack_report_csv(report, &text);
  if (status != SECTRACK_OK) return report_failure("serializing report", status);
  OwnedString text_guard(text);

  if (out_path.empty()) {
    std::cout << text;
  } else if (!write_file(out_path, text)) {
    std::cerr << "error: cannot write output file '" << out_path << "'\n";
    return kExitRuntime;
  }

  sectrack_stats stats{};
  status = sectrack_report_stats(report, &stats);
  if (status != SECTRACK_OK) return report_failure("reading stats", status);
  std::printf("mean improvement: %.6g m (%.6g cm) over %llu scored rows\n",
              stats.improvement_m, stats.improvement_m * 100.0,
              static_cast<unsigned long long>(stats.rows_scored));
  std::printf("soundness rate (min over seeds): %.6g, resets: %llu\n",
              stats.min_soundness_rate, static_cast<unsigned long long>(stats.reset_count));
  return kExitOk;
}

// out.json -> out.svg; paths without a .json suffix get .svg appended.
std::string svg_companion_path(const std::string& json_path) {
  const std::string suffix = ".json";
  if (json_path.size() > suffix.size() &&
      json_path.compare(json_path.size() - suffix.size(), suffix.size(), suffix) == 0) {
    return json_path.substr(0, json_path.size() - suffix.size()) + ".svg";
  }
  return json_path + ".svg";
}

int cmd_demo(const std::string& out_path) {
  sectrack_demo* demo = nullptr;
  sectrack_status status = sectrack_demo_run(&demo);
  if (status != SECTRACK_OK) return report_failure("building demo", status);
  std::unique_ptr<sectrack_demo, decltype(&sectrack_demo_free)> demo_guard(
      demo, &sectrack_demo_free);

  char* json_text = nullptr;
  status = sectrack_demo_json(demo, &json_text);
  if (status != SECTRACK_OK) return report_failure("serializing demo", status);
  OwnedString json_guard(json_text);

  char* svg_text = nullptr;
  status = sectrack_demo_svg(demo, &svg_text);
  if (status != SECTRACK_OK) return report_failure("rendering demo", status);
  OwnedString svg_guard(svg_text);

  const std::string svg_path = svg_companion_path(out_path);
  if (!write_file(out_path, json_text)) {
    std::cerr << "error: cannot write output file '" << out_path << "'\n";
    return kExitRuntime;
  }
  if (!write_file(svg_path, svg_text)) {
    std::cerr << "error: cannot write output file '" << svg_path << "'\n";
    return kExitRuntime;
  }
  std::printf("wrote %s and %s\n", out_path.c_str(), svg_path.c_str());
  return kExitOk;
}

int cmd_table(int type_id, int horizon) {
  std::vector<double> speeds(static_cast<std::size_t>(horizon) + 1, 0.0);
  std::vector<double> cumulative(static_cast<std::size_t>(horizon) + 1, 0.0);
  const sectrack_status status = sectrack_table(type_id, static_cast<uint32_t>(horizon),
                                                speeds.data(), cumulative.data());
  if (status != SECTRACK_OK) return report_failure("building table", status);

  std::printf("n,speed_m_per_cycle,cumulative_m\n");
  for (int n = 0; n < horizon; ++n) {
    std::printf("%d,%.6g,%.6g\n", n, speeds[n], cumulative[n]);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sectrack: set-membership observation denoising benchmark"};
  app.require_subcommand(1);

  std::string scenario_path;
  int seeds = 1;
  std::uint64_t base_seed = 42;
  std::string out_path;
  std::string format = "csv";
  std::string estimator;

  CLI::App* run = app.add_subcommand("run", "run a scenario benchmark");
  run->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  run->add_option("--seeds", seeds, "number of seeds")->default_val(1)
      ->check(CLI::PositiveNumber);
  run->add_option("--base-seed", base_seed, "first seed")->default_val(42);
  run->add_option("--out", out_path, "output file (stdout when omitted)");
  run->add_option("--format", format, "output format")->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--estimator", estimator, "estimator override")
      ->check(CLI::IsMember({"centroid", "bbox", "bbox_midpoint"}));

  std::string demo_out = "demo.json";
  CLI::App* demo = app.add_subcommand("demo", "write the two-cycle demo dump and SVG");
  demo->add_option("--out", demo_out, "output JSON path (SVG written alongside)")
      ->default_val("demo.json");

  int type_id = 0;
  int horizon = 50;
  CLI::App* table = app.add_subcommand("table", "print a player travel table");
  table->add_option("--type", type_id, "player type id")->default_val(0);
  table->add_option("--horizon", horizon, "cycles to print")->default_val(50)
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // exits 0 with help text
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << "\n";
    return kExitBadInput;
  }

  if (run->parsed()) {
    return cmd_run(scenario_path, seeds, base_seed, out_path, format, estimator);
  }
  if (demo->parsed()) return cmd_demo(demo_out);
  if (table->parsed()) return cmd_table(type_id, horizon);
  return kExitBadInput;
}

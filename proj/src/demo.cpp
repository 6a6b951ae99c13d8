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

#include "sectrack/demo.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace sectrack {

DemoResult two_cycle_demo() {
  const QuantizerParams quantizer;
  const VelocityNoise vel_noise;
  ObserverPose pose;
  pose.position = {0.0, 0.0};
  pose.body_angle = 0.0;
  pose.view_half_width = deg2rad(60.0);

  // The teammate starts near the top of the 20.1 m distance bin and moves
  // 0.82 m (within the 1.05 m/cycle bound), crossing into the 22.2 m bin.
  const Point2 true_pos_1{20.5, 0.0};
  const Point2 true_pos_2{21.28, 0.25};

  const MaxMoveTable table = build_max_move_table(player_type(0), 1);
  Rng rng(0);  // players carry no velocity reading; no draws are consumed

  DemoResult demo;
  demo.report.seed = 0;

  Belief belief;
  std::array<Point2, 2> truths = {true_pos_1, true_pos_2};
  for (int cycle = 1; cycle <= 2; ++cycle) {
    const Point2 truth = truths[cycle - 1];
    const auto obs = observe(pose, truth, std::nullopt, quantizer, vel_noise, rng, cycle);
    const Sector sector = observation_sector(*obs, quantizer);

    DemoCycle snap;
    snap.cycle = cycle;
    snap.sector = sector;
    snap.sector_poly = sector_to_polygon(sector, kSectorArcSteps);
    snap.true_pos = truth;
    if (cycle == 1) {
      belief = init_belief(ObjectKind::player, 0, sector, std::nullopt, vel_noise);
      snap.predicted = belief.region;  // no prior: prediction is the sector itself
      snap.intersection = belief.region;
    } else {
      belief = predict_player(belief, table);
      snap.predicted = belief.region;
      belief = update(belief, sector, std::nullopt, vel_noise);
      snap.intersection = belief.region;
    }
    snap.baseline_point = baseline_estimate(*obs);
    snap.denoised_point = estimate(belief, EstimatorMode::centroid);
    snap.baseline_err = distance(snap.baseline_point, truth);
    snap.denoised_err = distance(snap.denoised_point, truth);
    demo.cycles[cycle - 1] = snap;

    TraceRow row;
    row.seed = 0;
    row.cycle = cycle;
    row.object_id = "teammate";
    row.observed = true;
    row.true_pos = truth;
    row.estimate = snap.denoised_point;
    row.baseline_pos = snap.baseline_point;
    row.baseline_err = snap.baseline_err;
    row.denoised_err = snap.denoised_err;
    row.region_area = belief.region.area();
    row.was_reset = belief.was_reset;
    row.has_belief = true;
    row.sound = belief.region.contains(truth);
    row.observer_distance = distance(truth, pose.position);
    demo.report.rows.push_back(std::move(row));
  }
  return demo;
}

namespace {

using nlohmann::json;

json number(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

json polygon_to_json(const ConvexRegion& region) {
  json vertices = json::array();
  for (Point2 v : region.vertices()) {
    vertices.push_back(json::array({number(v.x), number(v.y)}));
  }
  return {{"vertices", std::move(vertices)}, {"area_m2", number(region.area())}};
}

json point_to_json(Point2 p) { return json::array({number(p.x), number(p.y)}); }

}  // namespace

std::string demo_to_json(const DemoResult& demo) {
  json cycles = json::array();
  for (const DemoCycle& c : demo.cycles) {
    cycles.push_back({{"cycle", c.cycle},
                      {"sector", polygon_to_json(c.sector_poly)},
                      {"predicted", polygon_to_json(c.predicted)},
                      {"intersection", polygon_to_json(c.intersection)},
                      {"baseline_point", point_to_json(c.baseline_point)},
                      {"denoised_point", point_to_json(c.denoised_point)},
                      {"true_pos", point_to_json(c.true_pos)},
                      {"baseline_err_m", number(c.baseline_err)},
                      {"denoised_err_m", number(c.denoised_err)}});
  }
  json doc = {{"cycles", std::move(cycles)}};
  return doc.dump(2) + "\n";
}

namespace {

struct SvgMapper {
  double min_x, min_y, scale, height;

  double x(double wx) const { return (wx - min_x) * scale; }
  double y(double wy) const { return height - (wy - min_y) * scale; }
};

void svg_polygon(std::ostringstream& out, const SvgMapper& m, const ConvexRegion& region,
                 const std::string& style) {
  out << "    <polygon points=\"";
  for (std::size_t i = 0; i < region.vertices().size(); ++i) {
    const Point2 v = region.vertices()[i];
    if (i) out << ' ';
    out << format_number(m.x(v.x)) << ',' << format_number(m.y(v.y));
  }
  out << "\" style=\"" << style << "\"/>\n";
}

void svg_dot(std::ostringstream& out, const SvgMapper& m, Point2 p, const std::string& fill) {
  out << "    <circle cx=\"" << format_number(m.x(p.x)) << "\" cy=\"" << format_number(m.y(p.y))
      << "\" r=\"4\" fill=\"" << fill << "\"/>\n";
}

}  // namespace

std::string demo_to_svg(const DemoResult& demo) {
  double min_x = 1e100, min_y = 1e100, max_x = -1e100, max_y = -1e100;
  for (const DemoCycle& c : demo.cycles) {
    for (const ConvexRegion* region : {&c.sector_poly, &c.predicted, &c.intersection}) {
      for (Point2 v : region->vertices()) {
        min_x = std::min(min_x, v.x);
        min_y = std::min(min_y, v.y);
        max_x = std::max(max_x, v.x);
        max_y = std::max(max_y, v.y);
      }
    }
  }
  const double margin = 0.5;
  min_x -= margin;
  min_y -= margin;
  max_x += margin;
  max_y += margin;
  const double world_w = max_x - min_x;
  const double world_h = max_y - min_y;
  const double width = 900.0;
  const double scale = width / world_w;
  const double height = world_h * scale;
  const SvgMapper m{min_x, min_y, scale, height};

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_number(width)
      << "\" height=\"" << format_number(height) << "\" viewBox=\"0 0 " << format_number(width)
      << ' ' << format_number(height) << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const DemoCycle& c : demo.cycles) {
    out << "  <g id=\"cycle-" << c.cycle << "\">\n";
    svg_polygon(out, m, c.sector_poly, "fill:none;stroke:black;stroke-width:1.5");
    svg_polygon(out, m, c.predicted, "fill:none;stroke:red;stroke-width:1;stroke-dasharray:6 3");
    svg_polygon(out, m, c.intersection, "fill:rgba(255,0,0,0.15);stroke:red;stroke-width:1.5");
    svg_dot(out, m, c.baseline_point, "blue");
    svg_dot(out, m, c.denoised_point, "red");
    svg_dot(out, m, c.true_pos, "green");
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace sectrack

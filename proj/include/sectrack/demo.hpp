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

#ifndef SECTRACK_DEMO_HPP_
#define SECTRACK_DEMO_HPP_

#include "sectrack/report.hpp"
#include "sectrack/tracker.hpp"

namespace sectrack {

/// Geometry captured for one demo cycle.
struct DemoCycle {
  int cycle = 0;
  Sector sector;
  ConvexRegion sector_poly;
  ConvexRegion predicted;
  ConvexRegion intersection;
  Point2 baseline_point;
  Point2 denoised_point;
  Point2 true_pos;
  double baseline_err = 0.0;
  double denoised_err = 0.0;
};

struct DemoResult {
  std::array<DemoCycle, 2> cycles;
  TraceReport report;
};

/// Scripted two-cycle walkthrough: an observer watches a teammate on two
/// consecutive cycles while the teammate moves far enough to shift the
/// quantized distance bin. Cycle 1's prediction is the fresh sector; cycle
/// 2's prediction (previous region grown by the one-cycle travel bound) cuts
/// the new sector, so the intersection is strictly smaller than the sector
/// and the denoised estimate lands closer to the truth than the baseline.
DemoResult two_cycle_demo();

/// {"cycles": [{sector, predicted, intersection, baseline_point,
/// denoised_point, ...}, ...]} with per-polygon vertices and areas.
std::string demo_to_json(const DemoResult& demo);

/// SVG rendering: one <g> group per cycle with the sector outline, predicted
/// region, intersection fill and the baseline/denoised/true dots.
std::string demo_to_svg(const DemoResult& demo);

}  // namespace sectrack

#endif  // SECTRACK_DEMO_HPP_

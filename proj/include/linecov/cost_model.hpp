// Copyright 2026 The linecov Authors
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

#ifndef LINECOV_COST_MODEL_HPP
#define LINECOV_COST_MODEL_HPP

#include <map>

#include "linecov/geometry.hpp"
#include "linecov/graph.hpp"

namespace linecov {

// Steady planar wind; direction is where the wind blows toward, radians
// from +x.
struct WindModel {
  double speed = 0.0;      // m/s, must stay below every travel speed
  double direction = 0.0;  // radians

  Vec2 vector() const { return speed * unit_from_heading(direction); }
};

struct RobotParams {
  double v_service = 1.0;   // m/s
  double v_deadhead = 1.0;  // m/s
  double capacity = std::numeric_limits<double>::infinity();  // Q, seconds
  double lambda = 0.0;      // route setup cost, seconds

  // Turn-aware parameters.
  double omega_max = 0.0;  // rad/s
  double a_max = 0.0;      // m/s^2
  double delta_max = 0.0;  // max corner deviation, meters
  double min_speed = 0.0;  // >0 marks a fixed-wing robot: stop-turns forbidden
  std::map<int, double> depot_headings;  // depot vertex id -> radians

  double depot_heading(int depot) const {
    auto it = depot_headings.find(depot);
    return it == depot_headings.end() ? 0.0 : it->second;
  }
  bool has_turn_params() const { return omega_max > 0.0 && a_max > 0.0 && delta_max > 0.0; }
};

// Ground speed for airspeed v under the given wind when traveling at angle
// phi from the wind vector. Result lies in [v - w, v + w]. Throws
// WindExceedsAirspeed when w >= v.
double effective_speed(double v, const WindModel& wind, double phi);

// Time to fly the straight segment tail -> head at airspeed v under wind.
// Direction-dependent in general; zero for coincident endpoints.
double travel_time(Vec2 tail, Vec2 head, double v, const WindModel& wind);

// Fills every unset edge cost/demand from the wind model: service values at
// v_service, deadhead values at v_deadhead, demands equal to costs. Explicit
// values are preserved unless overwrite is set. Self-loops keep their
// explicit service values and zero deadheads.
void populate_costs(Graph& graph, const RobotParams& params, const WindModel& wind,
                    bool overwrite = false);

}  // namespace linecov

#endif  // LINECOV_COST_MODEL_HPP

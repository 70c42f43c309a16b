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

#include "linecov/cost_model.hpp"

#include <cmath>

#include "linecov/errors.hpp"

namespace linecov {

double effective_speed(double v, const WindModel& wind, double phi) {
  const double w = wind.speed;
  if (w >= v) {
    throw WindExceedsAirspeed("wind speed " + std::to_string(w) +
                              " must be below travel speed " + std::to_string(v));
  }
  const double s = std::sin(phi);
  double under = v * v - w * w * s * s;
  if (under < 0.0) under = 0.0;  // rounding near w ~ v
  return w * std::cos(phi) + std::sqrt(under);
}

double travel_time(Vec2 tail, Vec2 head, double v, const WindModel& wind) {
  if (wind.speed >= v) {
    throw WindExceedsAirspeed("wind speed " + std::to_string(wind.speed) +
                              " must be below travel speed " + std::to_string(v));
  }
  const Vec2 t = head - tail;
  const double dist = norm(t);
  if (dist == 0.0) return 0.0;
  const double phi = normalize_angle(heading_of(t) - wind.direction);
  return dist / effective_speed(v, wind, phi);
}

void populate_costs(Graph& graph, const RobotParams& params, const WindModel& wind,
                    bool overwrite) {
  for (const Edge& edge : graph.edges()) {
    if (edge.is_loop()) continue;  // point features carry explicit values only
    Edge& e = graph.mutable_edge(edge.id);
    const Vec2 tail = graph.vertex(e.tail).position;
    const Vec2 head = graph.vertex(e.head).position;
    for (int d = 0; d < 2; ++d) {
      const Vec2 from = d == 0 ? tail : head;
      const Vec2 to = d == 0 ? head : tail;
      if (e.required && (overwrite || !is_set(e.service_cost[d]))) {
        e.service_cost[d] = travel_time(from, to, params.v_service, wind);
      }
      if (e.required && (overwrite || !is_set(e.service_demand[d]))) {
        e.service_demand[d] = e.service_cost[d];
      }
      if (overwrite || !is_set(e.deadhead_cost[d])) {
        e.deadhead_cost[d] = travel_time(from, to, params.v_deadhead, wind);
      }
      if (overwrite || !is_set(e.deadhead_demand[d])) {
        e.deadhead_demand[d] = e.deadhead_cost[d];
      }
    }
  }
  graph.finalize_costs();
}

}  // namespace linecov

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

#ifndef LINECOV_SOLUTION_HPP
#define LINECOV_SOLUTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linecov/geometry.hpp"
#include "linecov/graph.hpp"

namespace linecov {

enum class ManeuverKind { none, smooth_arc, decel_arc, stop_turn, dubins };

const char* maneuver_kind_name(ManeuverKind kind);

struct ManeuverInfo {
  ManeuverKind kind = ManeuverKind::none;
  double radius = 0.0;
  double turn_speed = 0.0;
  double duration = 0.0;
  double deviation = 0.0;
};

// One leg of a fully expanded route: a serviced arc or a deadheading move.
struct SolutionStep {
  enum class Kind { service, deadhead };
  Kind kind = Kind::service;
  Arc arc{};  // meaningful for service steps
  double cost = 0.0;
  double demand = 0.0;
  std::vector<Vec2> geometry;           // polyline, sampled for curved legs
  std::vector<int> vertices;            // vertex path for graph-based deadheads
  std::optional<ManeuverInfo> maneuver; // turn-aware deadheads only
};

struct SolutionRoute {
  int depot = -1;
  double cost = 0.0;    // includes the route setup cost lambda
  double demand = 0.0;
  std::vector<Arc> arcs;
  std::vector<SolutionStep> steps;
};

struct Solution {
  std::vector<SolutionRoute> routes;
  double total_cost = 0.0;
  double total_demand = 0.0;
  std::string algorithm;
  std::uint64_t seed = 0;

  int num_routes() const { return static_cast<int>(routes.size()); }
};

}  // namespace linecov

#endif  // LINECOV_SOLUTION_HPP

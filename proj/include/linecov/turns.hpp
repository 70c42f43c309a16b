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

#ifndef LINECOV_TURNS_HPP
#define LINECOV_TURNS_HPP

#include <array>
#include <optional>
#include <vector>

#include "linecov/route.hpp"

namespace linecov {

// ---------------------------------------------------------------------------
// Dubins paths

enum class DubinsWord { LSL, RSR, LSR, RSL, RLR, LRL };

struct DubinsSegment {
  char type;     // 'L', 'S' or 'R'
  double param;  // turn angle in radians for arcs, length in meters for 'S'
};

struct DubinsPath {
  DubinsWord word = DubinsWord::LSL;
  double radius = 0.0;
  double length = 0.0;  // meters
  Pose start;
  std::array<DubinsSegment, 3> segments{};
};

// Shortest path between two poses for a forward-only vehicle with minimum
// turning radius r_min; minimum over the six path classes. Always exists.
DubinsPath dubins_shortest(const Pose& start, const Pose& end, double r_min);

// Polyline along the path with chord error at most max_chord_error.
std::vector<Vec2> dubins_sample(const DubinsPath& path, double max_chord_error);

// ---------------------------------------------------------------------------
// Smooth turns between adjacent edges

// A corner maneuver between two adjacent edge segments meeting at interior
// angle theta. cost_delta is the extra traversal time over cruising
// straight through the corner; it can be negative when a full-speed arc
// cuts the corner.
struct TurnManeuver {
  ManeuverKind kind = ManeuverKind::none;
  double radius = 0.0;
  double turn_speed = 0.0;
  double duration = 0.0;   // decelerate + arc + accelerate
  double deviation = 0.0;  // distance from the corner vertex to the arc
  double cost_delta = 0.0;
  bool stop_warning = false;  // cannot stop within the half-edge
};

// Corner of interior angle theta in [0, pi], approached at v_cruise with at
// most half an edge length available on either side for speed changes.
// Wide corners keep cruise speed; sharp ones slow to the delta_max radius;
// very sharp ones take the fastest speed reachable within the half-edge,
// the positive root of the deceleration-distance quadratic. theta == 0
// degenerates to a stop-turn.
TurnManeuver smooth_turn(double theta, double v_cruise, const RobotParams& params,
                         double half_len_in, double half_len_out);

// ---------------------------------------------------------------------------
// Turn-aware leg pricing

// Prices the three deadheading cost functions — depot to arc, arc to arc,
// arc to depot — with Dubins curves and smooth turns. Poses sit at edge
// endpoints with headings along the edge. Between adjacent arcs the
// cheaper of the smooth turn and a Dubins reorientation is used; a
// positive min_speed forbids stop-turns and forces Dubins there. Demands
// follow the same time model.
class TurnLegs {
 public:
  TurnLegs(const Graph& graph, const RobotParams& params, bool dubins_only = false);

  CostDemand service(Arc a) const {
    return {graph_->service_cost(a), graph_->service_demand(a)};
  }
  CostDemand depot_to_arc(int depot, Arc a) const;
  CostDemand inter_arc(Arc a, Arc b) const;
  CostDemand arc_to_depot(Arc a, int depot) const;

  std::optional<SolutionStep> expand_depot_to_arc(int depot, Arc a) const;
  std::optional<SolutionStep> expand_inter_arc(Arc a, Arc b) const;
  std::optional<SolutionStep> expand_arc_to_depot(Arc a, int depot) const;
  SolutionStep expand_service(Arc a) const;

  Pose entry_pose(Arc a) const;
  Pose exit_pose(Arc a) const;
  Pose depot_pose(int depot) const;
  double r_min() const { return r_min_; }

  // The maneuver chosen between two arcs sharing a vertex, if the smooth
  // model applies there.
  std::optional<TurnManeuver> corner_maneuver(Arc a, Arc b) const;

 private:
  const Graph* graph_;
  RobotParams params_;
  bool dubins_only_;
  double r_min_;  // v_deadhead / omega_max
};

// Convenience wrappers over TurnLegs for a single junction / depot leg.
double turn_cost_between_arcs(Arc a, Arc b, const Graph& graph, const RobotParams& params);
double depot_leg_cost(int depot, Arc a, const Graph& graph, const RobotParams& params,
                      bool inbound);

// Multi-depot Merge-Embed-Merge with turn-aware deadheading. dubins_only
// disables the smooth-turn branch for comparison runs.
Solution solve_md_mem_turns(const Graph& graph, const RobotParams& params,
                            std::vector<int> depots = {}, bool dubins_only = false);

}  // namespace linecov

#endif  // LINECOV_TURNS_HPP

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

#include "linecov/turns.hpp"

#include <algorithm>
#include <cmath>

namespace linecov {

// ---------------------------------------------------------------------------
// Dubins paths
//
// Closed-form solutions for the six path classes in normalized
// coordinates (start at origin heading 0, distances in turning radii),
// following Shkel & Lumelsky.

namespace {

struct WordParams {
  bool valid = false;
  double t = 0.0, p = 0.0, q = 0.0;  // arc angles / straight length, in radii

  double total() const { return t + p + q; }
};

WordParams word_lsl(double alpha, double beta, double d) {
  WordParams out;
  const double sa = std::sin(alpha), sb = std::sin(beta);
  const double ca = std::cos(alpha), cb = std::cos(beta);
  double p_sq = 2.0 + d * d - 2.0 * std::cos(alpha - beta) + 2.0 * d * (sa - sb);
  if (p_sq < 0.0) {
    if (p_sq < -1e-9) return out;
    p_sq = 0.0;
  }
  const double mid = std::atan2(cb - ca, d + sa - sb);
  out.t = mod_2pi(-alpha + mid);
  out.p = std::sqrt(p_sq);
  out.q = mod_2pi(beta - mid);
  out.valid = true;
  return out;
}

WordParams word_rsr(double alpha, double beta, double d) {
  WordParams out;
  const double sa = std::sin(alpha), sb = std::sin(beta);
  const double ca = std::cos(alpha), cb = std::cos(beta);
  double p_sq = 2.0 + d * d - 2.0 * std::cos(alpha - beta) + 2.0 * d * (sb - sa);
  if (p_sq < 0.0) {
    if (p_sq < -1e-9) return out;
    p_sq = 0.0;
  }
  const double mid = std::atan2(ca - cb, d - sa + sb);
  out.t = mod_2pi(alpha - mid);
  out.p = std::sqrt(p_sq);
  out.q = mod_2pi(-beta + mid);
  out.valid = true;
  return out;
}

WordParams word_lsr(double alpha, double beta, double d) {
  WordParams out;
  const double sa = std::sin(alpha), sb = std::sin(beta);
  const double ca = std::cos(alpha), cb = std::cos(beta);
  double p_sq = -2.0 + d * d + 2.0 * std::cos(alpha - beta) + 2.0 * d * (sa + sb);
  if (p_sq < 0.0) {
    if (p_sq < -1e-9) return out;
    p_sq = 0.0;
  }
  const double p = std::sqrt(p_sq);
  const double mid = std::atan2(-ca - cb, d + sa + sb) - std::atan2(-2.0, p);
  out.t = mod_2pi(-alpha + mid);
  out.p = p;
  out.q = mod_2pi(-mod_2pi(beta) + mid);
  out.valid = true;
  return out;
}

WordParams word_rsl(double alpha, double beta, double d) {
  WordParams out;
  const double sa = std::sin(alpha), sb = std::sin(beta);
  const double ca = std::cos(alpha), cb = std::cos(beta);
  double p_sq = -2.0 + d * d + 2.0 * std::cos(alpha - beta) - 2.0 * d * (sa + sb);
  if (p_sq < 0.0) {
    if (p_sq < -1e-9) return out;
    p_sq = 0.0;
  }
  const double p = std::sqrt(p_sq);
  const double mid = std::atan2(ca + cb, d - sa - sb) - std::atan2(2.0, p);
  out.t = mod_2pi(alpha - mid);
  out.p = p;
  out.q = mod_2pi(beta - mid);
  out.valid = true;
  return out;
}

WordParams word_rlr(double alpha, double beta, double d) {
  WordParams out;
  const double sa = std::sin(alpha), sb = std::sin(beta);
  const double ca = std::cos(alpha), cb = std::cos(beta);
  const double tmp = (6.0 - d * d + 2.0 * std::cos(alpha - beta) + 2.0 * d * (sa - sb)) / 8.0;
  if (std::fabs(tmp) > 1.0) return out;
  const double p = mod_2pi(2.0 * kPi - std::acos(tmp));
  out.t = mod_2pi(alpha - std::atan2(ca - cb, d - sa + sb) + mod_2pi(p / 2.0));
  out.p = p;
  out.q = mod_2pi(alpha - beta - out.t + mod_2pi(p));
  out.valid = true;
  return out;
}

WordParams word_lrl(double alpha, double beta, double d) {
  WordParams out;
  const double sa = std::sin(alpha), sb = std::sin(beta);
  const double ca = std::cos(alpha), cb = std::cos(beta);
  const double tmp = (6.0 - d * d + 2.0 * std::cos(alpha - beta) + 2.0 * d * (sb - sa)) / 8.0;
  if (std::fabs(tmp) > 1.0) return out;
  const double p = mod_2pi(2.0 * kPi - std::acos(tmp));
  out.t = mod_2pi(-alpha - std::atan2(ca - cb, d + sa - sb) + mod_2pi(p / 2.0));
  out.p = p;
  out.q = mod_2pi(mod_2pi(beta) - alpha - out.t + mod_2pi(p));
  out.valid = true;
  return out;
}

constexpr char kWordTypes[6][3] = {
    {'L', 'S', 'L'}, {'R', 'S', 'R'}, {'L', 'S', 'R'},
    {'R', 'S', 'L'}, {'R', 'L', 'R'}, {'L', 'R', 'L'},
};

}  // namespace

DubinsPath dubins_shortest(const Pose& start, const Pose& end, double r_min) {
  if (!(r_min > 0.0)) throw GeometryError("Dubins radius must be positive");

  const double dx = end.position.x - start.position.x;
  const double dy = end.position.y - start.position.y;
  const double d = std::hypot(dx, dy) / r_min;
  const double phi = (dx == 0.0 && dy == 0.0) ? 0.0 : std::atan2(dy, dx);
  const double alpha = mod_2pi(start.heading - phi);
  const double beta = mod_2pi(end.heading - phi);

  const WordParams candidates[6] = {
      word_lsl(alpha, beta, d), word_rsr(alpha, beta, d), word_lsr(alpha, beta, d),
      word_rsl(alpha, beta, d), word_rlr(alpha, beta, d), word_lrl(alpha, beta, d),
  };

  int best = -1;
  for (int i = 0; i < 6; ++i) {
    if (!candidates[i].valid) continue;
    if (best < 0 || candidates[i].total() < candidates[best].total()) best = i;
  }
  // At least one CSC word always exists.
  const WordParams& w = candidates[best];

  DubinsPath path;
  path.word = static_cast<DubinsWord>(best);
  path.radius = r_min;
  path.start = start;
  path.length = w.total() * r_min;
  const double params[3] = {w.t, w.p, w.q};
  for (int i = 0; i < 3; ++i) {
    const char type = kWordTypes[best][i];
    path.segments[static_cast<std::size_t>(i)] = {
        type, type == 'S' ? params[i] * r_min : params[i]};
  }
  return path;
}

namespace {

Pose advance(const Pose& from, const DubinsSegment& seg, double radius, double fraction) {
  Pose out = from;
  if (seg.type == 'S') {
    const double len = seg.param * fraction;
    out.position = out.position + len * unit_from_heading(out.heading);
    return out;
  }
  const double sign = seg.type == 'L' ? 1.0 : -1.0;
  const double angle = seg.param * fraction;
  const Vec2 center =
      from.position + radius * unit_from_heading(from.heading + sign * kPi / 2.0);
  const double start_angle = heading_of(from.position - center);
  out.position = center + radius * unit_from_heading(start_angle + sign * angle);
  out.heading = normalize_angle(from.heading + sign * angle);
  return out;
}

}  // namespace

std::vector<Vec2> dubins_sample(const DubinsPath& path, double max_chord_error) {
  std::vector<Vec2> points = {path.start.position};
  Pose cursor = path.start;
  for (const DubinsSegment& seg : path.segments) {
    if (seg.param <= 1e-12) {
      cursor = advance(cursor, seg, path.radius, 1.0);
      continue;
    }
    int steps = 1;
    if (seg.type != 'S') {
      // Sagitta of one chord step stays below the error budget.
      double max_step = 2.0 * kPi;
      if (max_chord_error < path.radius) {
        max_step = 2.0 * std::acos(1.0 - max_chord_error / path.radius);
      }
      steps = std::max(1, static_cast<int>(std::ceil(seg.param / max_step)));
    }
    for (int i = 1; i <= steps; ++i) {
      Pose p = advance(cursor, seg, path.radius, static_cast<double>(i) / steps);
      points.push_back(p.position);
    }
    cursor = advance(cursor, seg, path.radius, 1.0);
  }
  return points;
}

// ---------------------------------------------------------------------------
// Smooth turns

TurnManeuver smooth_turn(double theta, double v_cruise, const RobotParams& params,
                         double half_len_in, double half_len_out) {
  if (!(theta >= -1e-12 && theta <= kPi + 1e-12)) {
    throw GeometryError("interior angle " + std::to_string(theta) + " outside [0, pi]");
  }
  if (!(v_cruise > 0.0) || !params.has_turn_params()) {
    throw GeometryError("smooth turns require positive speed, omega_max, a_max and delta_max");
  }
  theta = std::clamp(theta, 0.0, kPi);

  TurnManeuver m;
  if (theta >= kPi - 1e-9) {
    m.kind = ManeuverKind::none;
    m.turn_speed = v_cruise;
    return m;
  }

  const double omega = params.omega_max;
  const double acc = params.a_max;
  const double arc_angle = kPi - theta;
  const double available = std::min(half_len_in, half_len_out);

  double u;
  if (theta <= 1e-9) {
    u = 0.0;  // 180-degree turn: full stop
    if (v_cruise * v_cruise / (2.0 * acc) > available + 1e-12) m.stop_warning = true;
  } else {
    const double s2 = std::sin(theta / 2.0);
    const double t2 = std::tan(theta / 2.0);
    const double r_delta = params.delta_max * s2 / (1.0 - s2);
    const double u_cap = std::min(v_cruise, omega * r_delta);

    // Deceleration must fit between the half-edge midpoint and the arc's
    // tangent offset r/tan(theta/2): g(u) = u^2 - B u + C >= 0.
    const double B = 2.0 * acc / (omega * t2);
    const double C = 2.0 * acc * available - v_cruise * v_cruise;
    auto fits = [&](double s) { return s * s - B * s + C >= -1e-9; };

    if (fits(u_cap)) {
      u = u_cap;
    } else {
      const double disc = B * B - 4.0 * C;
      const double root = (B - std::sqrt(std::max(0.0, disc))) / 2.0;
      if (root < 0.0) {
        u = 0.0;
        m.stop_warning = true;  // cannot stop within the half-edge
      } else {
        u = root;
      }
    }
  }

  const double s2 = std::sin(theta / 2.0);
  const double radius = u / omega;
  const double tangent_offset = u > 0.0 ? radius / std::tan(theta / 2.0) : 0.0;

  m.radius = radius;
  m.turn_speed = u;
  m.deviation = u > 0.0 ? radius * (1.0 - s2) / s2 : 0.0;
  m.duration = 2.0 * (v_cruise - u) / acc + arc_angle / omega;
  m.cost_delta =
      arc_angle / omega + (v_cruise - u) * (v_cruise - u) / (acc * v_cruise) -
      2.0 * tangent_offset / v_cruise;
  if (u <= 1e-12) {
    m.kind = ManeuverKind::stop_turn;
    m.turn_speed = 0.0;
    m.radius = 0.0;
  } else if (u >= v_cruise - 1e-12) {
    m.kind = ManeuverKind::smooth_arc;
  } else {
    m.kind = ManeuverKind::decel_arc;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Turn-aware leg pricing

TurnLegs::TurnLegs(const Graph& graph, const RobotParams& params, bool dubins_only)
    : graph_(&graph), params_(params), dubins_only_(dubins_only) {
  if (!params.has_turn_params()) {
    throw GeometryError("turn-aware mode requires positive omega_max, a_max and delta_max");
  }
  r_min_ = params.v_deadhead / params.omega_max;
}

Pose TurnLegs::entry_pose(Arc a) const {
  return {graph_->vertex(graph_->arc_tail(a)).position, graph_->arc_heading(a)};
}

Pose TurnLegs::exit_pose(Arc a) const {
  return {graph_->vertex(graph_->arc_head(a)).position, graph_->arc_heading(a)};
}

Pose TurnLegs::depot_pose(int depot) const {
  return {graph_->vertex(depot).position, params_.depot_heading(depot)};
}

CostDemand TurnLegs::depot_to_arc(int depot, Arc a) const {
  const double t =
      dubins_shortest(depot_pose(depot), entry_pose(a), r_min_).length / params_.v_deadhead;
  return {t, t};
}

CostDemand TurnLegs::arc_to_depot(Arc a, int depot) const {
  const double t =
      dubins_shortest(exit_pose(a), depot_pose(depot), r_min_).length / params_.v_deadhead;
  return {t, t};
}

std::optional<TurnManeuver> TurnLegs::corner_maneuver(Arc a, Arc b) const {
  if (graph_->arc_head(a) != graph_->arc_tail(b)) return std::nullopt;
  if (dubins_only_) return std::nullopt;
  if (graph_->edge_length(a.edge) < 1e-9 || graph_->edge_length(b.edge) < 1e-9) {
    return std::nullopt;  // degenerate geometry, fall back to Dubins
  }
  const double turn = normalize_angle(graph_->arc_heading(b) - graph_->arc_heading(a));
  const double theta = kPi - std::fabs(turn);
  TurnManeuver m = smooth_turn(theta, params_.v_service, params_,
                               graph_->edge_length(a.edge) / 2.0,
                               graph_->edge_length(b.edge) / 2.0);
  if (params_.min_speed > 0.0 && m.turn_speed < params_.min_speed) {
    return std::nullopt;  // fixed-wing: no stop-turns, Dubins instead
  }
  return m;
}

CostDemand TurnLegs::inter_arc(Arc a, Arc b) const {
  auto smooth = corner_maneuver(a, b);
  if (smooth && smooth->kind == ManeuverKind::none) return {0.0, 0.0};
  const double dubins_time =
      dubins_shortest(exit_pose(a), entry_pose(b), r_min_).length / params_.v_deadhead;
  if (smooth && smooth->cost_delta <= dubins_time) {
    return {smooth->cost_delta, smooth->cost_delta};
  }
  return {dubins_time, dubins_time};
}

std::optional<SolutionStep> TurnLegs::expand_depot_to_arc(int depot, Arc a) const {
  DubinsPath path = dubins_shortest(depot_pose(depot), entry_pose(a), r_min_);
  if (path.length <= 1e-12) return std::nullopt;
  SolutionStep step;
  step.kind = SolutionStep::Kind::deadhead;
  step.cost = path.length / params_.v_deadhead;
  step.demand = step.cost;
  step.geometry = dubins_sample(path, 0.5);
  step.maneuver = ManeuverInfo{ManeuverKind::dubins, r_min_, params_.v_deadhead, step.cost, 0.0};
  return step;
}

std::optional<SolutionStep> TurnLegs::expand_arc_to_depot(Arc a, int depot) const {
  DubinsPath path = dubins_shortest(exit_pose(a), depot_pose(depot), r_min_);
  if (path.length <= 1e-12) return std::nullopt;
  SolutionStep step;
  step.kind = SolutionStep::Kind::deadhead;
  step.cost = path.length / params_.v_deadhead;
  step.demand = step.cost;
  step.geometry = dubins_sample(path, 0.5);
  step.maneuver = ManeuverInfo{ManeuverKind::dubins, r_min_, params_.v_deadhead, step.cost, 0.0};
  return step;
}

std::optional<SolutionStep> TurnLegs::expand_inter_arc(Arc a, Arc b) const {
  auto smooth = corner_maneuver(a, b);
  if (smooth && smooth->kind == ManeuverKind::none) return std::nullopt;

  DubinsPath path = dubins_shortest(exit_pose(a), entry_pose(b), r_min_);
  const double dubins_time = path.length / params_.v_deadhead;
  if (smooth && smooth->cost_delta <= dubins_time) {
    SolutionStep step;
    step.kind = SolutionStep::Kind::deadhead;
    step.cost = smooth->cost_delta;
    step.demand = smooth->cost_delta;
    step.maneuver =
        ManeuverInfo{smooth->kind, smooth->radius, smooth->turn_speed, smooth->duration,
                     smooth->deviation};

    const Vec2 corner = graph_->vertex(graph_->arc_head(a)).position;
    if (smooth->kind == ManeuverKind::stop_turn || smooth->radius <= 1e-12) {
      step.geometry = {corner};
      return step;
    }
    // Arc tangent to both segments: center on the interior bisector.
    const Vec2 in_dir = unit_from_heading(graph_->arc_heading(a));
    const Vec2 out_dir = unit_from_heading(graph_->arc_heading(b));
    const double turn = normalize_angle(graph_->arc_heading(b) - graph_->arc_heading(a));
    const double theta = kPi - std::fabs(turn);
    const double s2 = std::sin(theta / 2.0);
    Vec2 bisector = out_dir - in_dir;
    const double bn = norm(bisector);
    if (bn < 1e-12 || s2 < 1e-12) {
      step.geometry = {corner};
      return step;
    }
    bisector = (1.0 / bn) * bisector;
    const Vec2 center = corner + (smooth->radius / s2) * bisector;
    const double tangent_offset = smooth->radius / std::tan(theta / 2.0);
    const Vec2 t1 = corner - tangent_offset * in_dir;
    const Vec2 t2 = corner + tangent_offset * out_dir;
    const double a0 = heading_of(t1 - center);
    const double a1 = heading_of(t2 - center);
    double sweep = normalize_angle(a1 - a0);
    // The sweep runs the short way around, matching the turn's handedness.
    if (turn > 0 && sweep > 0) sweep -= 2.0 * kPi;
    if (turn < 0 && sweep < 0) sweep += 2.0 * kPi;
    const int steps = std::max(2, static_cast<int>(std::ceil(std::fabs(sweep) / 0.2)));
    for (int i = 0; i <= steps; ++i) {
      const double ang = a0 + sweep * static_cast<double>(i) / steps;
      step.geometry.push_back(center + smooth->radius * unit_from_heading(ang));
    }
    return step;
  }

  if (path.length <= 1e-12) return std::nullopt;
  SolutionStep step;
  step.kind = SolutionStep::Kind::deadhead;
  step.cost = dubins_time;
  step.demand = dubins_time;
  step.geometry = dubins_sample(path, 0.5);
  step.maneuver = ManeuverInfo{ManeuverKind::dubins, r_min_, params_.v_deadhead, dubins_time, 0.0};
  return step;
}

SolutionStep TurnLegs::expand_service(Arc a) const {
  SolutionStep step;
  step.kind = SolutionStep::Kind::service;
  step.arc = a;
  CostDemand cd = service(a);
  step.cost = cd.cost;
  step.demand = cd.demand;
  step.vertices = {graph_->arc_tail(a), graph_->arc_head(a)};
  step.geometry = {graph_->vertex(graph_->arc_tail(a)).position,
                   graph_->vertex(graph_->arc_head(a)).position};
  return step;
}

double turn_cost_between_arcs(Arc a, Arc b, const Graph& graph, const RobotParams& params) {
  return TurnLegs(graph, params).inter_arc(a, b).cost;
}

double depot_leg_cost(int depot, Arc a, const Graph& graph, const RobotParams& params,
                      bool inbound) {
  TurnLegs legs(graph, params);
  return inbound ? legs.arc_to_depot(a, depot).cost : legs.depot_to_arc(depot, a).cost;
}

Solution solve_md_mem_turns(const Graph& graph, const RobotParams& params,
                            std::vector<int> depots, bool dubins_only) {
  if (depots.empty()) depots = graph.depots();
  std::sort(depots.begin(), depots.end());
  depots.erase(std::unique(depots.begin(), depots.end()), depots.end());
  for (int d : depots) {
    if (d < 0 || d >= graph.num_vertices()) {
      throw Error(Errc::invalid_argument, "depot " + std::to_string(d) + " is not a vertex");
    }
  }
  TurnLegs legs(graph, params, dubins_only);
  MemSolver<TurnLegs> solver(graph, params, legs, depots);
  solver.run_to_completion();
  Solution out = solver.extract_solution();
  out.algorithm = dubins_only ? "md-mem-turns-dubins" : "md-mem-turns";
  return out;
}

}  // namespace linecov

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

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"
#include "linecov/io.hpp"

namespace linecov {

using ordered_json = nlohmann::ordered_json;

const char* maneuver_kind_name(ManeuverKind kind) {
  switch (kind) {
    case ManeuverKind::none:
      return "none";
    case ManeuverKind::smooth_arc:
      return "smooth-arc";
    case ManeuverKind::decel_arc:
      return "decel-arc";
    case ManeuverKind::stop_turn:
      return "stop-turn";
    case ManeuverKind::dubins:
      return "dubins";
  }
  return "unknown";
}

std::string params_fingerprint(const RobotParams& params, const WindModel& wind) {
  std::ostringstream canon;
  canon.precision(17);
  canon << params.v_service << '|' << params.v_deadhead << '|' << params.capacity << '|'
        << params.lambda << '|' << params.omega_max << '|' << params.a_max << '|'
        << params.delta_max << '|' << params.min_speed << '|' << wind.speed << '|'
        << wind.direction;
  for (const auto& [vertex, heading] : params.depot_headings) {
    canon << '|' << vertex << ':' << heading;
  }
  // FNV-1a 64.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canon.str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

ordered_json geometry_to_json(const std::vector<Vec2>& points) {
  ordered_json arr = ordered_json::array();
  for (const Vec2& p : points) arr.push_back({p.x, p.y});
  return arr;
}

ordered_json step_to_json(const SolutionStep& step) {
  ordered_json js;
  js["mode"] = step.kind == SolutionStep::Kind::service ? "service" : "deadhead";
  if (step.kind == SolutionStep::Kind::service) {
    js["edge"] = step.arc.edge;
    js["direction"] = step.arc.dir == Direction::forward ? "fwd" : "rev";
  }
  js["cost"] = step.cost;
  js["demand"] = step.demand;
  if (!step.vertices.empty()) js["vertices"] = step.vertices;
  if (step.maneuver) {
    js["maneuver"] = {{"kind", maneuver_kind_name(step.maneuver->kind)},
                      {"radius", step.maneuver->radius},
                      {"turn_speed", step.maneuver->turn_speed},
                      {"duration", step.maneuver->duration},
                      {"deviation", step.maneuver->deviation}};
  }
  if (!step.geometry.empty()) js["geometry"] = geometry_to_json(step.geometry);
  return js;
}

}  // namespace

std::string solution_to_json(const Solution& solution, const SolutionMeta& meta) {
  ordered_json doc;
  doc["format_version"] = 1;
  ordered_json jm;
  jm["algorithm"] = meta.algorithm.empty() ? solution.algorithm : meta.algorithm;
  jm["seed"] = meta.seed;
  jm["params_hash"] = meta.params_hash;
  if (meta.wall_time_s) jm["wall_time_s"] = *meta.wall_time_s;
  doc["metadata"] = std::move(jm);
  doc["totals"] = {{"cost", solution.total_cost},
                   {"demand", solution.total_demand},
                   {"num_routes", solution.num_routes()}};
  doc["routes"] = ordered_json::array();
  for (const SolutionRoute& r : solution.routes) {
    ordered_json jr;
    jr["depot"] = r.depot;
    jr["cost"] = r.cost;
    jr["demand"] = r.demand;
    jr["steps"] = ordered_json::array();
    for (const SolutionStep& s : r.steps) jr["steps"].push_back(step_to_json(s));
    doc["routes"].push_back(std::move(jr));
  }
  return doc.dump(2) + "\n";
}

std::string solution_to_geojson(const Solution& solution, const Graph& graph) {
  ordered_json features = ordered_json::array();
  std::set<int> depots;
  for (std::size_t ri = 0; ri < solution.routes.size(); ++ri) {
    const SolutionRoute& r = solution.routes[ri];
    depots.insert(r.depot);
    for (const SolutionStep& s : r.steps) {
      ordered_json coords = ordered_json::array();
      if (s.geometry.size() >= 2) {
        coords = geometry_to_json(s.geometry);
      } else if (s.geometry.size() == 1) {
        // Stationary maneuver: a degenerate two-point LineString.
        coords.push_back({s.geometry[0].x, s.geometry[0].y});
        coords.push_back({s.geometry[0].x, s.geometry[0].y});
      } else {
        continue;
      }
      ordered_json props{{"route_id", ri},
                         {"mode", s.kind == SolutionStep::Kind::service ? "service" : "deadhead"},
                         {"cost", s.cost}};
      if (s.maneuver) props["maneuver"] = maneuver_kind_name(s.maneuver->kind);
      features.push_back({{"type", "Feature"},
                          {"geometry", {{"type", "LineString"}, {"coordinates", coords}}},
                          {"properties", props}});
    }
  }
  for (int d : depots) {
    const Vec2 p = graph.vertex(d).position;
    features.push_back(
        {{"type", "Feature"},
         {"geometry", {{"type", "Point"}, {"coordinates", {p.x, p.y}}}},
         {"properties", {{"kind", "depot"}, {"vertex", d}}}});
  }
  ordered_json doc{{"type", "FeatureCollection"}, {"features", std::move(features)}};
  return doc.dump(2) + "\n";
}

namespace {

const char* kRoutePalette[] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4",
                               "#46f0f0", "#f032e6", "#808000", "#9a6324", "#000075"};

std::string fmt3(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string solution_to_svg(const Solution& solution, const Graph& graph) {
  double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
  auto grow = [&](Vec2 p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  };
  for (const Vertex& v : graph.vertices()) grow(v.position);
  for (const SolutionRoute& r : solution.routes) {
    for (const SolutionStep& s : r.steps) {
      for (const Vec2& p : s.geometry) grow(p);
    }
  }
  if (min_x > max_x) {
    min_x = min_y = 0.0;
    max_x = max_y = 1.0;
  }
  const double span = std::max(std::max(max_x - min_x, max_y - min_y), 1e-9);
  const double scale = 1000.0 / span;
  const double margin = 30.0;
  const double width = (max_x - min_x) * scale + 2 * margin;
  const double height = (max_y - min_y) * scale + 2 * margin;
  auto tx = [&](Vec2 p) {
    return Vec2{(p.x - min_x) * scale + margin, height - ((p.y - min_y) * scale + margin)};
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt3(width) << "\" height=\""
      << fmt3(height) << "\" viewBox=\"0 0 " << fmt3(width) << " " << fmt3(height) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::set<int> depots;
  for (std::size_t ri = 0; ri < solution.routes.size(); ++ri) {
    const SolutionRoute& r = solution.routes[ri];
    depots.insert(r.depot);
    const char* color = kRoutePalette[ri % (sizeof(kRoutePalette) / sizeof(char*))];
    for (const SolutionStep& s : r.steps) {
      if (s.geometry.size() < 2) continue;
      svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
          << (s.kind == SolutionStep::Kind::service ? "2.5" : "1.2") << "\"";
      if (s.kind == SolutionStep::Kind::deadhead) svg << " stroke-dasharray=\"6 4\"";
      svg << " points=\"";
      for (std::size_t i = 0; i < s.geometry.size(); ++i) {
        const Vec2 p = tx(s.geometry[i]);
        if (i) svg << ' ';
        svg << fmt3(p.x) << ',' << fmt3(p.y);
      }
      svg << "\"/>\n";
    }
  }
  for (int d : depots) {
    const Vec2 p = tx(graph.vertex(d).position);
    svg << "<rect x=\"" << fmt3(p.x - 6) << "\" y=\"" << fmt3(p.y - 6)
        << "\" width=\"12\" height=\"12\" fill=\"black\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace linecov

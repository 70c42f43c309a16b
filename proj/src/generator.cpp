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
#include <cmath>
#include <numeric>

#include "json.hpp"
#include "linecov/deadhead.hpp"
#include "linecov/io.hpp"
#include "linecov/multi_depot.hpp"
#include "linecov/rng.hpp"

namespace linecov {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

}  // namespace

Instance gen_instance(std::uint64_t seed, int num_required, double area_meters, int depot_count,
                      GraphMode mode) {
  if (num_required < 1) throw Error(Errc::invalid_argument, "need at least one required edge");
  if (area_meters <= 0.0) throw Error(Errc::invalid_argument, "area must be positive");

  Rng rng(seed);

  // Jittered-grid intersections; grow the grid until the 4-neighbor
  // candidate set can host a spanning tree plus the requested edge count.
  int n = std::max(2, static_cast<int>(std::llround(num_required * 0.72)) + 1);
  std::vector<Vec2> points;
  std::vector<std::pair<int, int>> candidates;
  for (;;) {
    points.clear();
    candidates.clear();
    const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    const double cell = area_meters / side;
    for (int i = 0; i < n; ++i) {
      const int row = i / side;
      const int col = i % side;
      points.push_back({(col + 0.15 + 0.7 * rng.next_double()) * cell,
                        (row + 0.15 + 0.7 * rng.next_double()) * cell});
    }
    for (int i = 0; i < n; ++i) {
      const int row = i / side;
      const int col = i % side;
      if (col + 1 < side && i + 1 < n) candidates.push_back({i, i + 1});
      if (row + 1 < side && i + side < n) candidates.push_back({i, i + side});
    }
    if (static_cast<int>(candidates.size()) >= num_required && n - 1 <= num_required) break;
    if (static_cast<int>(candidates.size()) < num_required) {
      n = std::max(n + 1, static_cast<int>(std::llround(n * 1.3)));
      continue;
    }
    // Too many tree edges for the requested count: shrink.
    n = num_required + 1;
  }

  rng.shuffle(candidates);
  Dsu dsu(n);
  std::vector<std::pair<int, int>> chosen;
  std::vector<std::pair<int, int>> spare;
  for (const auto& c : candidates) {
    if (dsu.unite(c.first, c.second)) {
      chosen.push_back(c);
    } else {
      spare.push_back(c);
    }
  }
  for (const auto& c : spare) {
    if (static_cast<int>(chosen.size()) >= num_required) break;
    chosen.push_back(c);
  }
  chosen.resize(static_cast<std::size_t>(num_required));

  // Dense re-index over the vertices actually used.
  std::vector<int> vertex_map(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> vertices;
  auto map_vertex = [&](int i) {
    int& slot = vertex_map[static_cast<std::size_t>(i)];
    if (slot < 0) {
      slot = static_cast<int>(vertices.size());
      vertices.push_back({slot, points[static_cast<std::size_t>(i)]});
    }
    return slot;
  };
  std::vector<Edge> edges;
  for (const auto& c : chosen) {
    Edge e;
    e.id = static_cast<int>(edges.size());
    e.tail = map_vertex(c.first);
    e.head = map_vertex(c.second);
    e.required = true;
    edges.push_back(e);
  }

  RobotParams params;
  params.v_service = 7.0;
  params.v_deadhead = 10.0;
  params.lambda = 0.0;
  params.omega_max = kPi / 4.0;
  params.a_max = 3.0;
  params.delta_max = 2.0;

  WindModel wind;
  wind.speed = 0.5 + rng.next_double();  // well below both speeds
  wind.direction = normalize_angle(rng.next_double() * 2.0 * kPi);

  Graph graph = Graph::build(std::move(vertices), std::move(edges), {0}, mode);
  populate_costs(graph, params, wind);

  // Capacity: always above the worst single-edge round trip, and low
  // enough that large instances need several routes.
  const int nv = graph.num_vertices();
  std::vector<int> depot_pool(static_cast<std::size_t>(nv));
  std::iota(depot_pool.begin(), depot_pool.end(), 0);
  rng.shuffle(depot_pool);

  DeadheadSource probe(graph, params, wind);
  double total_service = 0.0;
  double worst_single = 0.0;
  for (int id : graph.required_edges()) {
    const Edge& e = graph.edge(id);
    total_service += (e.service_demand[0] + e.service_demand[1]) / 2.0;
    double best = std::numeric_limits<double>::infinity();
    for (int d = 0; d < 2; ++d) {
      const int tail = d == 0 ? e.tail : e.head;
      const int head = d == 0 ? e.head : e.tail;
      // Probing against the first pool depot keeps the bound valid for
      // any depot assignment that includes it.
      best = std::min(best, probe.demand(depot_pool[0], tail) + e.service_demand[d] +
                                probe.demand(head, depot_pool[0]));
    }
    worst_single = std::max(worst_single, best);
  }
  const double target_routes = std::clamp(num_required / 22.0, 1.0, 60.0);
  params.capacity = std::max(worst_single * 1.25, total_service / target_routes);

  if (depot_count <= 0) depot_count = suggest_depot_count(graph, params.capacity);
  depot_count = std::min(depot_count, nv);
  std::vector<int> depots(depot_pool.begin(), depot_pool.begin() + depot_count);
  std::sort(depots.begin(), depots.end());

  Graph final_graph =
      Graph::build(graph.vertices(), graph.edges(), std::move(depots), mode);
  return Instance{std::move(final_graph), params, wind};
}

Instance import_geojson(const std::string& geojson_text, double snap_tolerance) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(geojson_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("GeoJSON parse error: ") + e.what());
  }
  if (!doc.is_object() || doc.value("type", "") != "FeatureCollection" ||
      !doc.contains("features")) {
    throw SchemaError("expected a GeoJSON FeatureCollection");
  }

  std::vector<Vec2> snapped;
  auto snap = [&](Vec2 p) {
    for (std::size_t i = 0; i < snapped.size(); ++i) {
      if (distance(snapped[i], p) <= snap_tolerance) return static_cast<int>(i);
    }
    snapped.push_back(p);
    return static_cast<int>(snapped.size()) - 1;
  };

  std::vector<std::pair<int, int>> segments;
  std::vector<int> depot_hints;
  auto add_line = [&](const nlohmann::json& coords) {
    for (std::size_t i = 0; i + 1 < coords.size(); ++i) {
      const Vec2 a{coords[i][0].get<double>(), coords[i][1].get<double>()};
      const Vec2 b{coords[i + 1][0].get<double>(), coords[i + 1][1].get<double>()};
      const int u = snap(a);
      const int v = snap(b);
      if (u != v) segments.push_back({u, v});
    }
  };
  for (const auto& feature : doc["features"]) {
    if (!feature.contains("geometry")) continue;
    const auto& geom = feature["geometry"];
    const std::string type = geom.value("type", "");
    if (type == "LineString") {
      add_line(geom["coordinates"]);
    } else if (type == "MultiLineString") {
      for (const auto& line : geom["coordinates"]) add_line(line);
    } else if (type == "Point") {
      depot_hints.push_back(
          snap({geom["coordinates"][0].get<double>(), geom["coordinates"][1].get<double>()}));
    }
  }
  if (segments.empty()) throw SchemaError("GeoJSON contains no usable line features");

  // Duplicate segments collapse to one required edge.
  std::sort(segments.begin(), segments.end(), [](auto a, auto b) {
    return std::minmax(a.first, a.second) < std::minmax(b.first, b.second);
  });
  segments.erase(std::unique(segments.begin(), segments.end(),
                             [](auto a, auto b) {
                               return std::minmax(a.first, a.second) ==
                                      std::minmax(b.first, b.second);
                             }),
                 segments.end());

  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < snapped.size(); ++i) {
    vertices.push_back({static_cast<int>(i), snapped[i]});
  }
  std::vector<Edge> edges;
  for (const auto& s : segments) {
    Edge e;
    e.id = static_cast<int>(edges.size());
    e.tail = s.first;
    e.head = s.second;
    e.required = true;
    edges.push_back(e);
  }
  std::vector<int> depots = depot_hints.empty() ? std::vector<int>{0} : depot_hints;

  RobotParams params;
  params.v_service = 7.0;
  params.v_deadhead = 10.0;
  params.omega_max = kPi / 4.0;
  params.a_max = 3.0;
  params.delta_max = 2.0;

  Graph graph =
      Graph::build(std::move(vertices), std::move(edges), std::move(depots), GraphMode::complete_fly);
  WindModel wind;
  populate_costs(graph, params, wind);

  double worst = 0.0;
  DeadheadSource probe(graph, params, wind);
  for (int id : graph.required_edges()) {
    const Edge& e = graph.edge(id);
    double best = std::numeric_limits<double>::infinity();
    for (int depot : graph.depots()) {
      for (int d = 0; d < 2; ++d) {
        const int tail = d == 0 ? e.tail : e.head;
        const int head = d == 0 ? e.head : e.tail;
        best = std::min(best, probe.demand(depot, tail) + e.service_demand[d] +
                                  probe.demand(head, depot));
      }
    }
    worst = std::max(worst, best);
  }
  params.capacity = std::max(1200.0, worst * 1.25);
  return Instance{std::move(graph), params, wind};
}

}  // namespace linecov

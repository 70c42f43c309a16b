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

#include "linecov/graph.hpp"

#include <algorithm>
#include <cmath>

namespace linecov {

namespace {

void check_value(double v, const char* what, int edge_id) {
  if (!is_set(v)) return;  // unset values are resolved by populate_costs
  if (std::isinf(v) || v < 0.0) {
    throw NegativeCost(std::string(what) + " of edge " + std::to_string(edge_id) +
                       " must be finite and non-negative");
  }
}

}  // namespace

Graph Graph::build(std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<int> depots,
                   GraphMode mode) {
  Graph g;
  g.mode_ = mode;

  const int n = static_cast<int>(vertices.size());
  if (n == 0) throw SchemaError("graph has no vertices");
  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (int i = 0; i < n; ++i) {
    if (vertices[static_cast<std::size_t>(i)].id != i) {
      throw SchemaError("vertex ids must be unique and dense in [0, " + std::to_string(n) + ")");
    }
    const Vec2 p = vertices[static_cast<std::size_t>(i)].position;
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw SchemaError("vertex " + std::to_string(i) + " has non-finite coordinates");
    }
  }
  g.vertices_ = std::move(vertices);

  const int ne = static_cast<int>(edges.size());
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (int i = 0; i < ne; ++i) {
    Edge& e = edges[static_cast<std::size_t>(i)];
    if (e.id != i) {
      throw SchemaError("edge ids must be unique and dense in [0, " + std::to_string(ne) + ")");
    }
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
      throw SchemaError("edge " + std::to_string(i) + " references an unknown vertex");
    }
    for (int d = 0; d < 2; ++d) {
      check_value(e.service_cost[d], "service cost", i);
      check_value(e.service_demand[d], "service demand", i);
      check_value(e.deadhead_cost[d], "deadhead cost", i);
      check_value(e.deadhead_demand[d], "deadhead demand", i);
    }
    if (e.is_loop()) {
      // Point-feature artificial edges; free to deadhead "across".
      for (int d = 0; d < 2; ++d) {
        if ((is_set(e.deadhead_cost[d]) && e.deadhead_cost[d] != 0.0) ||
            (is_set(e.deadhead_demand[d]) && e.deadhead_demand[d] != 0.0)) {
          throw SchemaError("self-loop edge " + std::to_string(i) +
                            " must have zero deadhead cost and demand");
        }
        e.deadhead_cost[d] = 0.0;
        e.deadhead_demand[d] = 0.0;
      }
    }
    if (e.required) g.required_.push_back(i);
  }
  g.edges_ = std::move(edges);

  if (depots.empty()) throw SchemaError("at least one depot is required");
  std::sort(depots.begin(), depots.end());
  depots.erase(std::unique(depots.begin(), depots.end()), depots.end());
  for (int d : depots) {
    if (d < 0 || d >= n) throw SchemaError("depot " + std::to_string(d) + " is not a vertex");
  }
  g.depots_ = std::move(depots);

  g.check_connected();
  return g;
}

void Graph::check_connected() const {
  if (mode_ == GraphMode::complete_fly) return;  // always connected by flight
  const int n = num_vertices();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : edges_) {
    if (e.is_loop()) continue;
    adj[static_cast<std::size_t>(e.tail)].push_back(e.head);
    adj[static_cast<std::size_t>(e.head)].push_back(e.tail);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++count;
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  if (count != n) {
    throw DisconnectedGraph("graph is not connected: reached " + std::to_string(count) + " of " +
                            std::to_string(n) + " vertices");
  }
}

void Graph::add_point_features(const std::vector<Vec2>& points, double service_cost,
                               double service_demand) {
  if (service_cost < 0.0 || service_demand < 0.0 || !std::isfinite(service_cost) ||
      !std::isfinite(service_demand)) {
    throw NegativeCost("point feature service cost/demand must be finite and non-negative");
  }
  for (const Vec2& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw SchemaError("point feature has non-finite coordinates");
    }
    const int v = num_vertices();
    vertices_.push_back({v, p});
    Edge e;
    e.id = num_edges();
    e.tail = v;
    e.head = v;
    e.required = true;
    for (int d = 0; d < 2; ++d) {
      e.service_cost[d] = service_cost;
      e.service_demand[d] = service_demand;
      e.deadhead_cost[d] = 0.0;
      e.deadhead_demand[d] = 0.0;
    }
    required_.push_back(e.id);
    edges_.push_back(e);
  }
}

void Graph::finalize_costs() const {
  for (const Edge& e : edges_) {
    for (int d = 0; d < 2; ++d) {
      if (!is_set(e.deadhead_cost[d]) || !is_set(e.deadhead_demand[d])) {
        throw MissingServiceValues("edge " + std::to_string(e.id) +
                                   " is missing deadhead cost or demand");
      }
      if (e.required && (!is_set(e.service_cost[d]) || !is_set(e.service_demand[d]))) {
        throw MissingServiceValues("required edge " + std::to_string(e.id) +
                                   " is missing service cost or demand");
      }
    }
  }
}

double Graph::average_service_cost() const {
  double total = 0.0;
  for (int id : required_) {
    const Edge& e = edge(id);
    total += (e.service_cost[0] + e.service_cost[1]) / 2.0;
  }
  return total;
}

}  // namespace linecov

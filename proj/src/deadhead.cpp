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

#include "linecov/deadhead.hpp"

#include <limits>

namespace linecov {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

DeadheadMatrices::DeadheadMatrices(const Graph& graph) {
  n_ = graph.num_vertices();
  const std::size_t nn = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
  cost_.assign(nn, kInf);
  demand_.assign(nn, kInf);
  next_.assign(nn, -1);

  for (int v = 0; v < n_; ++v) {
    cost_[index(v, v)] = 0.0;
    demand_[index(v, v)] = 0.0;
    next_[index(v, v)] = v;
  }
  // Lowest edge id wins parallel-edge ties.
  for (const Edge& e : graph.edges()) {
    if (e.is_loop()) continue;
    for (int d = 0; d < 2; ++d) {
      const int u = d == 0 ? e.tail : e.head;
      const int v = d == 0 ? e.head : e.tail;
      const std::size_t i = index(u, v);
      if (e.deadhead_cost[d] < cost_[i]) {
        cost_[i] = e.deadhead_cost[d];
        demand_[i] = e.deadhead_demand[d];
        next_[i] = v;
      }
    }
  }
  // Floyd-Warshall; strict improvement keeps the path found first in
  // ascending intermediate-vertex order.
  for (int k = 0; k < n_; ++k) {
    for (int u = 0; u < n_; ++u) {
      const double cuk = cost_[index(u, k)];
      if (cuk == kInf) continue;
      for (int v = 0; v < n_; ++v) {
        const double relaxed = cuk + cost_[index(k, v)];
        if (relaxed < cost_[index(u, v)]) {
          cost_[index(u, v)] = relaxed;
          demand_[index(u, v)] = demand_[index(u, k)] + demand_[index(k, v)];
          next_[index(u, v)] = next_[index(u, k)];
        }
      }
    }
  }
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (cost_[index(u, v)] == kInf) {
        throw UnreachablePair("no deadhead path from vertex " + std::to_string(u) +
                              " to vertex " + std::to_string(v));
      }
    }
  }
}

std::vector<int> DeadheadMatrices::path(int u, int v) const {
  std::vector<int> out = {u};
  while (u != v) {
    u = next_[index(u, v)];
    out.push_back(u);
  }
  return out;
}

DeadheadSource::DeadheadSource(const Graph& graph, const RobotParams& params,
                               const WindModel& wind)
    : graph_(&graph), params_(params), wind_(wind) {
  if (graph.mode() == GraphMode::explicit_edges) {
    matrix_ = std::make_shared<DeadheadMatrices>(graph);
  }
}

double DeadheadSource::fly_time(int u, int v) const {
  return travel_time(graph_->vertex(u).position, graph_->vertex(v).position, params_.v_deadhead,
                     wind_);
}

ValidationReport validate_instance(const Graph& graph, const RobotParams& params,
                                   const DeadheadSource& deadheads) {
  ValidationReport report;
  report.capacity = params.capacity;
  for (int id : graph.required_edges()) {
    const Edge& e = graph.edge(id);
    double best = kInf;
    for (int depot : graph.depots()) {
      for (int d = 0; d < 2; ++d) {
        const int tail = d == 0 ? e.tail : e.head;
        const int head = d == 0 ? e.head : e.tail;
        const double dem = deadheads.demand(depot, tail) + e.service_demand[d] +
                           deadheads.demand(head, depot);
        if (dem < best) best = dem;
      }
    }
    if (!(best <= params.capacity)) {
      report.infeasible_edges.push_back({id, best});
    }
  }
  return report;
}

}  // namespace linecov

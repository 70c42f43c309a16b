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

#ifndef LINECOV_DEADHEAD_HPP
#define LINECOV_DEADHEAD_HPP

#include <memory>
#include <vector>

#include "linecov/cost_model.hpp"
#include "linecov/graph.hpp"

namespace linecov {

// All-pairs shortest deadheading paths over the explicit edge set, computed
// with Floyd-Warshall. Demands follow the cost-optimal path; ties in cost
// keep the path found first in ascending intermediate-vertex order.
class DeadheadMatrices {
 public:
  explicit DeadheadMatrices(const Graph& graph);

  double cost(int u, int v) const { return cost_[index(u, v)]; }
  double demand(int u, int v) const { return demand_[index(u, v)]; }

  // Concrete min-cost vertex path from u to v, inclusive of endpoints.
  std::vector<int> path(int u, int v) const;

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<double> cost_;
  std::vector<double> demand_;
  std::vector<int> next_;  // next hop on the chosen path, -1 = unreachable
};

// Deadheading source for solvers: either matrix-backed (explicit edge set)
// or computed on demand from coordinates in complete-fly mode, where the
// straight flight is minimal and storing O(V^2) entries is wasteful. The
// on-demand path sits in the innermost savings loops, so it works off the
// precomputed wind vector with no trigonometry.
class DeadheadSource {
 public:
  DeadheadSource(const Graph& graph, const RobotParams& params, const WindModel& wind);

  double cost(int u, int v) const {
    if (matrix_) return matrix_->cost(u, v);
    return fly_time(u, v);
  }
  double demand(int u, int v) const {
    if (matrix_) return matrix_->demand(u, v);
    return fly_time(u, v);
  }
  std::vector<int> path(int u, int v) const {
    if (matrix_) return matrix_->path(u, v);
    return u == v ? std::vector<int>{u} : std::vector<int>{u, v};
  }
  bool matrix_backed() const { return matrix_ != nullptr; }

  double fly_time(int u, int v) const {
    const Vec2 d = graph_->vertex(v).position - graph_->vertex(u).position;
    const double dist = norm(d);
    if (dist == 0.0) return 0.0;
    if (wind_speed_ == 0.0) return dist / v_deadhead_;
    const double cos_phi = dot(d, wind_unit_) / dist;
    double under = v_deadhead_ * v_deadhead_ -
                   wind_speed_ * wind_speed_ * (1.0 - cos_phi * cos_phi);
    if (under < 0.0) under = 0.0;
    return dist / (wind_speed_ * cos_phi + std::sqrt(under));
  }

 private:
  const Graph* graph_;
  double v_deadhead_ = 1.0;
  double wind_speed_ = 0.0;
  Vec2 wind_unit_{1.0, 0.0};
  std::shared_ptr<const DeadheadMatrices> matrix_;  // null in complete-fly mode
};

// Lists required edges whose best single-edge route demand over all depots
// and both directions exceeds capacity.
ValidationReport validate_instance(const Graph& graph, const RobotParams& params,
                                   const DeadheadSource& deadheads);

}  // namespace linecov

#endif  // LINECOV_DEADHEAD_HPP

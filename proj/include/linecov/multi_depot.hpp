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

#ifndef LINECOV_MULTI_DEPOT_HPP
#define LINECOV_MULTI_DEPOT_HPP

#include <cstdint>
#include <vector>

#include "linecov/mem.hpp"

namespace linecov {

// One route per required edge, each anchored at the (depot, direction)
// pair of lowest cost whose demand fits. Throws InfeasibleEdge listing
// offenders.
std::vector<Route> md_initialize(const Graph& graph, const RobotParams& params,
                                 const WindModel& wind, const std::vector<int>& depots);

// Multi-depot Merge-Embed-Merge; empty depot list means the graph's own.
Solution solve_md_mem(const Graph& graph, const RobotParams& params, const WindModel& wind,
                      std::vector<int> depots = {});

// 1 + ceil(sum of per-edge average service demand / Q); 1 on an empty
// required set.
int suggest_depot_count(const Graph& graph, double capacity);

// PAM-style k-medoids over the endpoints of required edges, using the
// symmetric deadhead cost as distance. Deterministic for a given seed.
std::vector<int> k_medoids_depots(const Graph& graph, const RobotParams& params,
                                  const WindModel& wind, int k, std::uint64_t seed);

// Nearest-depot partition of the required edges (ties to the lowest depot
// id), each partition solved as an independent single-depot problem.
Solution cluster_first_baseline(const Graph& graph, const RobotParams& params,
                                const WindModel& wind, std::vector<int> depots = {});

}  // namespace linecov

#endif  // LINECOV_MULTI_DEPOT_HPP

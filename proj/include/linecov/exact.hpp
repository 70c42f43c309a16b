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

#ifndef LINECOV_EXACT_HPP
#define LINECOV_EXACT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "linecov/cost_model.hpp"
#include "linecov/solution.hpp"

namespace linecov {

struct OracleLimits {
  int max_required_edges = 5;
  int max_vertices = 12;
};

// Exhaustive optimum for tiny instances: every partition of the required
// edges into routes, every service order and direction within a route, and
// every depot per route, filtered by capacity. Throws TooLarge beyond the
// limits and InfeasibleInstance when nothing fits.
Solution brute_force(const Graph& graph, const RobotParams& params, const WindModel& wind,
                     std::vector<int> depots, bool turn_aware, OracleLimits limits = {});

// Single-depot ILP model in LP format with K routes: binary service
// variables, integer deadhead and flow variables, generalized flow
// constraints for depot connectivity, flow caps with |E| as the big-M
// coefficient, and vertex symmetry. The objective carries no route setup
// cost, so comparisons against the heuristics require lambda = 0. Output
// is byte-deterministic for a given instance. Complete-fly instances get
// their implicit deadhead edges materialized (priced by the wind model),
// which is where the variable cap matters.
std::string export_ilp_lp(const Graph& graph, const RobotParams& params, const WindModel& wind,
                          int depot, int K, std::size_t max_variables = 200000);

}  // namespace linecov

#endif  // LINECOV_EXACT_HPP

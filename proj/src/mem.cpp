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

#include "linecov/mem.hpp"

namespace linecov {

Solution solve_mem(const Graph& graph, const RobotParams& params, const WindModel& wind,
                   int depot) {
  if (depot < 0 || depot >= graph.num_vertices()) {
    throw Error(Errc::invalid_argument, "depot " + std::to_string(depot) + " is not a vertex");
  }
  DeadheadSource deadheads(graph, params, wind);
  HolonomicLegs legs(graph, deadheads);
  MemSolver<HolonomicLegs> solver(graph, params, legs, {depot});
  solver.run_to_completion();
  Solution out = solver.extract_solution();
  out.algorithm = "mem";
  return out;
}

}  // namespace linecov

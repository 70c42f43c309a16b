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

#include "linecov/multi_depot.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "linecov/rng.hpp"

namespace linecov {

namespace {

std::vector<int> resolve_depots(const Graph& graph, std::vector<int> depots) {
  if (depots.empty()) depots = graph.depots();
  std::sort(depots.begin(), depots.end());
  depots.erase(std::unique(depots.begin(), depots.end()), depots.end());
  for (int d : depots) {
    if (d < 0 || d >= graph.num_vertices()) {
      throw Error(Errc::invalid_argument, "depot " + std::to_string(d) + " is not a vertex");
    }
  }
  if (depots.empty()) throw Error(Errc::invalid_argument, "no depots given");
  return depots;
}

}  // namespace

std::vector<Route> md_initialize(const Graph& graph, const RobotParams& params,
                                 const WindModel& wind, const std::vector<int>& depots) {
  DeadheadSource deadheads(graph, params, wind);
  HolonomicLegs legs(graph, deadheads);
  std::vector<int> ds = resolve_depots(graph, depots);
  std::vector<Route> routes;
  std::vector<int> bad;
  for (int e : graph.required_edges()) {
    auto r = try_init_route(static_cast<int>(routes.size()), e, ds, legs, params);
    if (!r) {
      bad.push_back(e);
      continue;
    }
    routes.push_back(std::move(*r));
  }
  if (!bad.empty()) {
    std::string msg = "required edges not serviceable within capacity:";
    for (int e : bad) msg += " " + std::to_string(e);
    throw InfeasibleEdge(msg);
  }
  return routes;
}

Solution solve_md_mem(const Graph& graph, const RobotParams& params, const WindModel& wind,
                      std::vector<int> depots) {
  std::vector<int> ds = resolve_depots(graph, std::move(depots));
  DeadheadSource deadheads(graph, params, wind);
  HolonomicLegs legs(graph, deadheads);
  MemSolver<HolonomicLegs> solver(graph, params, legs, ds);
  solver.run_to_completion();
  Solution out = solver.extract_solution();
  out.algorithm = "md-mem";
  return out;
}

int suggest_depot_count(const Graph& graph, double capacity) {
  if (capacity <= 0.0) {
    throw Error(Errc::invalid_argument, "capacity must be positive");
  }
  if (graph.required_edges().empty()) return 1;
  double total = 0.0;
  for (int id : graph.required_edges()) {
    const Edge& e = graph.edge(id);
    total += e.service_demand[0] + e.service_demand[1];
  }
  return 1 + static_cast<int>(std::ceil(total / (2.0 * capacity)));
}

std::vector<int> k_medoids_depots(const Graph& graph, const RobotParams& params,
                                  const WindModel& wind, int k, std::uint64_t seed) {
  std::set<int> candidate_set;
  for (int id : graph.required_edges()) {
    candidate_set.insert(graph.edge(id).tail);
    candidate_set.insert(graph.edge(id).head);
  }
  std::vector<int> candidates(candidate_set.begin(), candidate_set.end());
  const int n = static_cast<int>(candidates.size());
  if (k < 1 || k > n) {
    throw KTooLarge("k = " + std::to_string(k) + " outside [1, " + std::to_string(n) +
                    "] candidate endpoints");
  }
  if (k == n) return candidates;

  DeadheadSource deadheads(graph, params, wind);
  auto dist = [&](int i, int j) {
    const int u = candidates[static_cast<std::size_t>(i)];
    const int v = candidates[static_cast<std::size_t>(j)];
    return (deadheads.cost(u, v) + deadheads.cost(v, u)) / 2.0;
  };

  Rng rng(seed);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  rng.shuffle(order);
  std::vector<int> medoids(order.begin(), order.begin() + k);
  std::sort(medoids.begin(), medoids.end());

  auto assignment_cost = [&](const std::vector<int>& meds) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (int m : meds) best = std::min(best, dist(i, m));
      total += best;
    }
    return total;
  };

  double current = assignment_cost(medoids);
  for (int iter = 0; iter < 100; ++iter) {
    double best_cost = current;
    int best_pos = -1, best_cand = -1;
    for (int pos = 0; pos < k; ++pos) {
      for (int cand = 0; cand < n; ++cand) {
        if (std::find(medoids.begin(), medoids.end(), cand) != medoids.end()) continue;
        std::vector<int> trial = medoids;
        trial[static_cast<std::size_t>(pos)] = cand;
        const double c = assignment_cost(trial);
        if (c < best_cost) {
          best_cost = c;
          best_pos = pos;
          best_cand = cand;
        }
      }
    }
    if (best_pos < 0) break;
    medoids[static_cast<std::size_t>(best_pos)] = best_cand;
    current = best_cost;
  }

  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int m : medoids) out.push_back(candidates[static_cast<std::size_t>(m)]);
  std::sort(out.begin(), out.end());
  return out;
}

Solution cluster_first_baseline(const Graph& graph, const RobotParams& params,
                                const WindModel& wind, std::vector<int> depots) {
  std::vector<int> ds = resolve_depots(graph, std::move(depots));
  DeadheadSource deadheads(graph, params, wind);

  // Nearest depot per required edge, over both endpoints of the edge and
  // the symmetric deadhead cost; ties to the lowest depot id.
  std::vector<std::vector<int>> partition(ds.size());
  for (int id : graph.required_edges()) {
    const Edge& e = graph.edge(id);
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_depot = 0;
    for (std::size_t di = 0; di < ds.size(); ++di) {
      const int d = ds[di];
      for (int endpoint : {e.tail, e.head}) {
        const double c = (deadheads.cost(d, endpoint) + deadheads.cost(endpoint, d)) / 2.0;
        if (c < best) {
          best = c;
          best_depot = di;
        }
      }
    }
    partition[best_depot].push_back(id);
  }

  Solution out;
  out.algorithm = "cluster-baseline";
  for (std::size_t di = 0; di < ds.size(); ++di) {
    if (partition[di].empty()) continue;
    // Single-depot subproblem: same graph, required set restricted.
    std::vector<Edge> edges = graph.edges();
    std::vector<char> keep(edges.size(), 0);
    for (int id : partition[di]) keep[static_cast<std::size_t>(id)] = 1;
    for (Edge& e : edges) {
      if (e.required && !keep[static_cast<std::size_t>(e.id)]) e.required = false;
    }
    Graph sub = Graph::build(graph.vertices(), std::move(edges), {ds[di]}, graph.mode());
    Solution part = solve_mem(sub, params, wind, ds[di]);
    for (SolutionRoute& r : part.routes) {
      out.total_cost += r.cost;
      out.total_demand += r.demand;
      out.routes.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace linecov

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

#include "linecov/exact.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "linecov/multi_depot.hpp"
#include "linecov/route.hpp"
#include "linecov/turns.hpp"

namespace linecov {

namespace {

struct BlockBest {
  bool feasible = false;
  std::vector<Arc> arcs;
  int depot = -1;
  double cost = 0.0;
  double demand = 0.0;
};

// Cheapest feasible single route servicing exactly the given edges: every
// service order, direction assignment and depot.
template <class Legs>
BlockBest best_block_route(const std::vector<int>& edge_ids, const std::vector<int>& depots,
                           const Legs& legs, const RobotParams& params) {
  BlockBest best;
  std::vector<int> order = edge_ids;
  std::sort(order.begin(), order.end());
  const std::size_t s = order.size();
  do {
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
      std::vector<Arc> arcs(s);
      for (std::size_t i = 0; i < s; ++i) {
        arcs[i] = {order[i],
                   (mask >> i) & 1u ? Direction::reverse : Direction::forward};
      }
      for (int depot : depots) {
        CostDemand cd = evaluate_route<Legs>(arcs, depot, legs, params.lambda);
        if (cd.demand > params.capacity) continue;
        if (best.feasible && cd.cost >= best.cost) continue;
        best.feasible = true;
        best.arcs = arcs;
        best.depot = depot;
        best.cost = cd.cost;
        best.demand = cd.demand;
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

template <class Legs>
Solution brute_force_impl(const Graph& graph, const std::vector<int>& depots, const Legs& legs,
                          const RobotParams& params) {
  const std::vector<int>& req = graph.required_edges();
  const int m = static_cast<int>(req.size());

  std::vector<int> assign(static_cast<std::size_t>(m), 0);
  bool have_best = false;
  double best_total = 0.0;
  std::vector<BlockBest> best_blocks;

  // Set partitions as restricted growth strings.
  auto evaluate_partition = [&]() {
    int num_blocks = 0;
    for (int a : assign) num_blocks = std::max(num_blocks, a + 1);
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(num_blocks));
    for (int i = 0; i < m; ++i) {
      blocks[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])].push_back(
          req[static_cast<std::size_t>(i)]);
    }
    double total = 0.0;
    std::vector<BlockBest> routes;
    for (const auto& block : blocks) {
      BlockBest r = best_block_route(block, depots, legs, params);
      if (!r.feasible) return;
      total += r.cost;
      routes.push_back(std::move(r));
    }
    if (!have_best || total < best_total) {
      have_best = true;
      best_total = total;
      best_blocks = std::move(routes);
    }
  };

  auto recurse = [&](auto&& self, int i, int max_block) -> void {
    if (i == m) {
      evaluate_partition();
      return;
    }
    for (int b = 0; b <= max_block; ++b) {
      assign[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(max_block, b + 1));
    }
  };
  if (m == 0) {
    have_best = true;
  } else {
    recurse(recurse, 0, 0);
  }

  if (!have_best) {
    throw InfeasibleInstance("no feasible partition of the required edges within capacity");
  }

  Solution out;
  for (const BlockBest& b : best_blocks) {
    Route r;
    r.depot = b.depot;
    r.arcs = b.arcs;
    r.cost = b.cost;
    r.demand = b.demand;
    SolutionRoute sr;
    sr.depot = b.depot;
    sr.cost = b.cost;
    sr.demand = b.demand;
    sr.arcs = b.arcs;
    sr.steps = expand_route(r, legs);
    out.total_cost += b.cost;
    out.total_demand += b.demand;
    out.routes.push_back(std::move(sr));
  }
  return out;
}

}  // namespace

Solution brute_force(const Graph& graph, const RobotParams& params, const WindModel& wind,
                     std::vector<int> depots, bool turn_aware, OracleLimits limits) {
  if (graph.num_required() > limits.max_required_edges) {
    throw TooLarge("instance has " + std::to_string(graph.num_required()) +
                   " required edges; oracle limit is " +
                   std::to_string(limits.max_required_edges));
  }
  if (graph.num_vertices() > limits.max_vertices) {
    throw TooLarge("instance has " + std::to_string(graph.num_vertices()) +
                   " vertices; oracle limit is " + std::to_string(limits.max_vertices));
  }
  if (depots.empty()) depots = graph.depots();
  std::sort(depots.begin(), depots.end());
  depots.erase(std::unique(depots.begin(), depots.end()), depots.end());

  Solution out;
  if (turn_aware) {
    TurnLegs legs(graph, params);
    out = brute_force_impl(graph, depots, legs, params);
    out.algorithm = "oracle-turns";
  } else {
    DeadheadSource deadheads(graph, params, wind);
    HolonomicLegs legs(graph, deadheads);
    out = brute_force_impl(graph, depots, legs, params);
    out.algorithm = "oracle";
  }
  return out;
}

// ---------------------------------------------------------------------------
// ILP export

namespace {

std::string fmt_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

// Linear expression keyed by variable index so duplicate terms (e.g.
// self-loop arcs entering and leaving the same vertex) merge.
class Expr {
 public:
  void add(int var, double coeff) { terms_[var] += coeff; }

  std::string render(const std::vector<std::string>& names) const {
    std::string out;
    for (const auto& [var, coeff] : terms_) {
      if (coeff == 0.0) continue;
      if (out.empty()) {
        if (coeff == 1.0) {
          out += names[static_cast<std::size_t>(var)];
        } else if (coeff == -1.0) {
          out += "- " + names[static_cast<std::size_t>(var)];
        } else {
          out += fmt_num(coeff) + " " + names[static_cast<std::size_t>(var)];
        }
        continue;
      }
      if (coeff == 1.0) {
        out += " + " + names[static_cast<std::size_t>(var)];
      } else if (coeff == -1.0) {
        out += " - " + names[static_cast<std::size_t>(var)];
      } else if (coeff > 0.0) {
        out += " + " + fmt_num(coeff) + " " + names[static_cast<std::size_t>(var)];
      } else {
        out += " - " + fmt_num(-coeff) + " " + names[static_cast<std::size_t>(var)];
      }
    }
    return out;
  }

  bool has_terms() const {
    for (const auto& [var, coeff] : terms_) {
      if (coeff != 0.0) return true;
    }
    return false;
  }

 private:
  std::map<int, double> terms_;
};

}  // namespace

namespace {

// The model needs a concrete edge set: in complete-fly mode every vertex
// pair without an edge gets a non-required one priced by the wind model.
Graph materialize_fly_edges(const Graph& graph, const RobotParams& params,
                            const WindModel& wind) {
  std::vector<Edge> edges = graph.edges();
  std::vector<std::vector<char>> seen(
      static_cast<std::size_t>(graph.num_vertices()),
      std::vector<char>(static_cast<std::size_t>(graph.num_vertices()), 0));
  for (const Edge& e : edges) {
    seen[static_cast<std::size_t>(e.tail)][static_cast<std::size_t>(e.head)] = 1;
    seen[static_cast<std::size_t>(e.head)][static_cast<std::size_t>(e.tail)] = 1;
  }
  for (int u = 0; u < graph.num_vertices(); ++u) {
    for (int v = u + 1; v < graph.num_vertices(); ++v) {
      if (seen[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
      Edge e;
      e.id = static_cast<int>(edges.size());
      e.tail = u;
      e.head = v;
      e.required = false;
      const Vec2 pu = graph.vertex(u).position;
      const Vec2 pv = graph.vertex(v).position;
      e.deadhead_cost[0] = travel_time(pu, pv, params.v_deadhead, wind);
      e.deadhead_cost[1] = travel_time(pv, pu, params.v_deadhead, wind);
      e.deadhead_demand[0] = e.deadhead_cost[0];
      e.deadhead_demand[1] = e.deadhead_cost[1];
      edges.push_back(e);
    }
  }
  return Graph::build(graph.vertices(), std::move(edges), graph.depots(),
                      GraphMode::explicit_edges);
}

}  // namespace

std::string export_ilp_lp(const Graph& input_graph, const RobotParams& params,
                          const WindModel& wind, int depot, int K, std::size_t max_variables) {
  if (K < 1) throw Error(Errc::invalid_argument, "K must be at least 1");
  if (depot < 0 || depot >= input_graph.num_vertices()) {
    throw Error(Errc::invalid_argument, "depot " + std::to_string(depot) + " is not a vertex");
  }
  input_graph.finalize_costs();
  if (input_graph.mode() == GraphMode::complete_fly) {
    const std::size_t nv = static_cast<std::size_t>(input_graph.num_vertices());
    const std::size_t worst_edges = static_cast<std::size_t>(input_graph.num_edges()) +
                                    nv * (nv - 1) / 2;
    const std::size_t worst_vars =
        static_cast<std::size_t>(K) *
        (2u * static_cast<std::size_t>(input_graph.num_required()) + 4u * worst_edges);
    if (worst_vars > max_variables) {
      throw TooManyVariables("materialized fly model would have about " +
                             std::to_string(worst_vars) + " variables; cap is " +
                             std::to_string(max_variables));
    }
  }
  const Graph graph = input_graph.mode() == GraphMode::complete_fly
                          ? materialize_fly_edges(input_graph, params, wind)
                          : input_graph;

  const int E = graph.num_edges();
  const std::vector<int>& req = graph.required_edges();
  const int m = static_cast<int>(req.size());
  const std::size_t num_vars = static_cast<std::size_t>(K) *
                               (2u * static_cast<std::size_t>(m) +
                                4u * static_cast<std::size_t>(E));
  if (num_vars > max_variables) {
    throw TooManyVariables("model would have " + std::to_string(num_vars) +
                           " variables; cap is " + std::to_string(max_variables));
  }

  // Variable layout per route k: s for required arcs, then d and z for all
  // arcs; forward before reverse throughout.
  std::vector<std::string> names;
  std::vector<int> req_index(static_cast<std::size_t>(E), -1);
  for (int i = 0; i < m; ++i) req_index[static_cast<std::size_t>(req[static_cast<std::size_t>(i)])] = i;

  const int per_k = 2 * m + 4 * E;
  auto s_var = [&](int k, int e, int dir) {
    return k * per_k + 2 * req_index[static_cast<std::size_t>(e)] + dir;
  };
  auto d_var = [&](int k, int e, int dir) { return k * per_k + 2 * m + 2 * e + dir; };
  auto z_var = [&](int k, int e, int dir) { return k * per_k + 2 * m + 2 * E + 2 * e + dir; };

  names.resize(num_vars);
  for (int k = 0; k < K; ++k) {
    const std::string kk = std::to_string(k + 1);
    for (int e : req) {
      names[static_cast<std::size_t>(s_var(k, e, 0))] = "s_k" + kk + "_e" + std::to_string(e) + "_f";
      names[static_cast<std::size_t>(s_var(k, e, 1))] = "s_k" + kk + "_e" + std::to_string(e) + "_r";
    }
    for (int e = 0; e < E; ++e) {
      names[static_cast<std::size_t>(d_var(k, e, 0))] = "d_k" + kk + "_e" + std::to_string(e) + "_f";
      names[static_cast<std::size_t>(d_var(k, e, 1))] = "d_k" + kk + "_e" + std::to_string(e) + "_r";
      names[static_cast<std::size_t>(z_var(k, e, 0))] = "z_k" + kk + "_e" + std::to_string(e) + "_f";
      names[static_cast<std::size_t>(z_var(k, e, 1))] = "z_k" + kk + "_e" + std::to_string(e) + "_r";
    }
  }

  std::ostringstream lp;
  lp << "\\ line coverage single-depot model, |V| = " << graph.num_vertices()
     << ", |E| = " << E << ", |E_r| = " << m << ", K = " << K << ", depot = " << depot << "\n";

  // Objective: service and deadhead travel costs; no route setup term.
  Expr obj;
  for (int k = 0; k < K; ++k) {
    for (int e : req) {
      const Edge& edge = graph.edge(e);
      obj.add(s_var(k, e, 0), edge.service_cost[0]);
      obj.add(s_var(k, e, 1), edge.service_cost[1]);
    }
    for (int e = 0; e < E; ++e) {
      const Edge& edge = graph.edge(e);
      obj.add(d_var(k, e, 0), edge.deadhead_cost[0]);
      obj.add(d_var(k, e, 1), edge.deadhead_cost[1]);
    }
  }
  lp << "Minimize\n obj: " << obj.render(names) << "\n";
  lp << "Subject To\n";

  // Exact-once service of each required edge, summed over routes.
  for (int e : req) {
    Expr c;
    for (int k = 0; k < K; ++k) {
      c.add(s_var(k, e, 0), 1.0);
      c.add(s_var(k, e, 1), 1.0);
    }
    lp << " conce_0_" << e << ": " << c.render(names) << " = 1\n";
  }

  // Per-route capacity.
  for (int k = 0; k < K; ++k) {
    Expr c;
    for (int e : req) {
      const Edge& edge = graph.edge(e);
      c.add(s_var(k, e, 0), edge.service_demand[0]);
      c.add(s_var(k, e, 1), edge.service_demand[1]);
    }
    for (int e = 0; e < E; ++e) {
      const Edge& edge = graph.edge(e);
      c.add(d_var(k, e, 0), edge.deadhead_demand[0]);
      c.add(d_var(k, e, 1), edge.deadhead_demand[1]);
    }
    lp << " ccap_" << (k + 1) << "_0: " << c.render(names) << " <= " << fmt_num(params.capacity)
       << "\n";
  }

  auto arc_tail_of = [&](int e, int dir) {
    const Edge& edge = graph.edge(e);
    return dir == 0 ? edge.tail : edge.head;
  };
  auto arc_head_of = [&](int e, int dir) {
    const Edge& edge = graph.edge(e);
    return dir == 0 ? edge.head : edge.tail;
  };

  for (int k = 0; k < K; ++k) {
    const std::string kk = std::to_string(k + 1);

    // Flow released at the depot equals the number of serviced arcs.
    Expr dep;
    for (int e = 0; e < E; ++e) {
      for (int dir = 0; dir < 2; ++dir) {
        if (arc_tail_of(e, dir) == depot) dep.add(z_var(k, e, dir), 1.0);
      }
    }
    for (int e : req) {
      dep.add(s_var(k, e, 0), -1.0);
      dep.add(s_var(k, e, 1), -1.0);
    }
    lp << " cfdep_" << kk << "_0: " << dep.render(names) << " = 0\n";

    // Every other vertex absorbs one unit per servicing arc ending there.
    for (int v = 0; v < graph.num_vertices(); ++v) {
      if (v == depot) continue;
      Expr c;
      for (int e = 0; e < E; ++e) {
        for (int dir = 0; dir < 2; ++dir) {
          if (arc_head_of(e, dir) == v) c.add(z_var(k, e, dir), 1.0);
          if (arc_tail_of(e, dir) == v) c.add(z_var(k, e, dir), -1.0);
        }
      }
      for (int e : req) {
        for (int dir = 0; dir < 2; ++dir) {
          if (arc_head_of(e, dir) == v) c.add(s_var(k, e, dir), -1.0);
        }
      }
      if (!c.has_terms()) continue;
      lp << " cfabs_" << kk << "_" << v << ": " << c.render(names) << " = 0\n";
    }

    // Flow on any arc is capped by the route's total serviced arcs.
    for (int e = 0; e < E; ++e) {
      for (int dir = 0; dir < 2; ++dir) {
        Expr c;
        c.add(z_var(k, e, dir), 1.0);
        for (int r : req) {
          c.add(s_var(k, r, 0), -1.0);
          c.add(s_var(k, r, 1), -1.0);
        }
        lp << " ccap2_" << kk << "_" << (2 * e + dir) << ": " << c.render(names) << " <= 0\n";
      }
    }

    // Positive flow needs traversal; |E| is the big-M coefficient.
    for (int e = 0; e < E; ++e) {
      if (graph.edge(e).required) continue;
      for (int dir = 0; dir < 2; ++dir) {
        Expr c;
        c.add(z_var(k, e, dir), 1.0);
        c.add(d_var(k, e, dir), -static_cast<double>(E));
        lp << " ccap3_" << kk << "_" << (2 * e + dir) << ": " << c.render(names) << " <= 0\n";
      }
    }
    for (int e : req) {
      for (int dir = 0; dir < 2; ++dir) {
        Expr c;
        c.add(z_var(k, e, dir), 1.0);
        c.add(s_var(k, e, dir), -static_cast<double>(E));
        c.add(d_var(k, e, dir), -static_cast<double>(E));
        lp << " ccap1_" << kk << "_" << (2 * e + dir) << ": " << c.render(names) << " <= 0\n";
      }
    }

    // Arcs entering a vertex match arcs leaving it.
    for (int v = 0; v < graph.num_vertices(); ++v) {
      Expr c;
      for (int e : req) {
        for (int dir = 0; dir < 2; ++dir) {
          if (arc_head_of(e, dir) == v) c.add(s_var(k, e, dir), 1.0);
          if (arc_tail_of(e, dir) == v) c.add(s_var(k, e, dir), -1.0);
        }
      }
      for (int e = 0; e < E; ++e) {
        for (int dir = 0; dir < 2; ++dir) {
          if (arc_head_of(e, dir) == v) c.add(d_var(k, e, dir), 1.0);
          if (arc_tail_of(e, dir) == v) c.add(d_var(k, e, dir), -1.0);
        }
      }
      if (!c.has_terms()) continue;
      lp << " csym_" << kk << "_" << v << ": " << c.render(names) << " = 0\n";
    }
  }

  lp << "Bounds\n";
  lp << "Generals\n";
  for (int k = 0; k < K; ++k) {
    for (int e = 0; e < E; ++e) {
      lp << " " << names[static_cast<std::size_t>(d_var(k, e, 0))] << " "
         << names[static_cast<std::size_t>(d_var(k, e, 1))] << "\n";
    }
    for (int e = 0; e < E; ++e) {
      lp << " " << names[static_cast<std::size_t>(z_var(k, e, 0))] << " "
         << names[static_cast<std::size_t>(z_var(k, e, 1))] << "\n";
    }
  }
  lp << "Binaries\n";
  for (int k = 0; k < K; ++k) {
    for (int e : req) {
      lp << " " << names[static_cast<std::size_t>(s_var(k, e, 0))] << " "
         << names[static_cast<std::size_t>(s_var(k, e, 1))] << "\n";
    }
  }
  lp << "End\n";
  return lp.str();
}

}  // namespace linecov

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

#ifndef LINECOV_ROUTE_HPP
#define LINECOV_ROUTE_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "linecov/deadhead.hpp"
#include "linecov/errors.hpp"
#include "linecov/graph.hpp"
#include "linecov/solution.hpp"

namespace linecov {

struct CostDemand {
  double cost = 0.0;
  double demand = 0.0;
};

// A depot-anchored sequence of serviced arcs. Besides the totals, a route
// caches the interior sums (service costs plus inter-arc deadheads) for
// both traversal orientations, which is what makes each merge-candidate
// evaluation O(1) even with direction reversals on asymmetric graphs.
struct Route {
  int id = -1;
  int depot = -1;
  std::vector<Arc> arcs;
  double cost = 0.0;    // deadhead in + interior + deadhead out + lambda
  double demand = 0.0;
  double interior_cost[2] = {0.0, 0.0};    // [0] as listed, [1] reversed
  double interior_demand[2] = {0.0, 0.0};
  bool alive = true;

  Arc front() const { return arcs.front(); }
  Arc back() const { return arcs.back(); }
  int size() const { return static_cast<int>(arcs.size()); }
};

// One of the eight ways to concatenate two routes: either order, either
// constituent optionally reversed.
struct MergePermutation {
  std::uint8_t code = 0;

  bool q_first() const { return code & 1; }
  bool p_reversed() const { return (code >> 1) & 1; }
  bool q_reversed() const { return (code >> 2) & 1; }
};

// Candidate merge kept in the savings max-heap.
struct SavingsEntry {
  double saving = 0.0;
  int p = -1;
  int q = -1;
  int depot = -1;
  MergePermutation permutation;
};

// View of one constituent under a chosen direction.
struct OrientedPart {
  Arc first, last;
  double icost, idemand;          // interior in traversal orientation
  double icost_rev, idemand_rev;  // interior of the reverse traversal
};

inline OrientedPart orient(const Route& r, bool reversed) {
  OrientedPart o;
  if (reversed) {
    o.first = r.back().reversed();
    o.last = r.front().reversed();
    o.icost = r.interior_cost[1];
    o.idemand = r.interior_demand[1];
    o.icost_rev = r.interior_cost[0];
    o.idemand_rev = r.interior_demand[0];
  } else {
    o.first = r.front();
    o.last = r.back();
    o.icost = r.interior_cost[0];
    o.idemand = r.interior_demand[0];
    o.icost_rev = r.interior_cost[1];
    o.idemand_rev = r.interior_demand[1];
  }
  return o;
}

// Deadheading legs priced between vertices; the plain (holonomic) cost
// structure. Service values come straight off the graph.
class HolonomicLegs {
 public:
  HolonomicLegs(const Graph& graph, const DeadheadSource& deadheads)
      : graph_(&graph), deadheads_(&deadheads) {}

  CostDemand service(Arc a) const {
    return {graph_->service_cost(a), graph_->service_demand(a)};
  }
  CostDemand depot_to_arc(int depot, Arc a) const {
    return between(depot, graph_->arc_tail(a));
  }
  CostDemand inter_arc(Arc a, Arc b) const {
    return between(graph_->arc_head(a), graph_->arc_tail(b));
  }
  CostDemand arc_to_depot(Arc a, int depot) const {
    return between(graph_->arc_head(a), depot);
  }

  std::optional<SolutionStep> expand_depot_to_arc(int depot, Arc a) const {
    return expand_between(depot, graph_->arc_tail(a));
  }
  std::optional<SolutionStep> expand_inter_arc(Arc a, Arc b) const {
    return expand_between(graph_->arc_head(a), graph_->arc_tail(b));
  }
  std::optional<SolutionStep> expand_arc_to_depot(Arc a, int depot) const {
    return expand_between(graph_->arc_head(a), depot);
  }
  SolutionStep expand_service(Arc a) const {
    SolutionStep step;
    step.kind = SolutionStep::Kind::service;
    step.arc = a;
    CostDemand cd = service(a);
    step.cost = cd.cost;
    step.demand = cd.demand;
    step.vertices = {graph_->arc_tail(a), graph_->arc_head(a)};
    step.geometry = {graph_->vertex(graph_->arc_tail(a)).position,
                     graph_->vertex(graph_->arc_head(a)).position};
    return step;
  }

  const Graph& graph() const { return *graph_; }

 private:
  CostDemand between(int u, int v) const {
    if (u == v) return {0.0, 0.0};  // shared endpoint: the zero path
    return {deadheads_->cost(u, v), deadheads_->demand(u, v)};
  }

  std::optional<SolutionStep> expand_between(int u, int v) const {
    if (u == v) return std::nullopt;
    SolutionStep step;
    step.kind = SolutionStep::Kind::deadhead;
    CostDemand cd = between(u, v);
    step.cost = cd.cost;
    step.demand = cd.demand;
    step.vertices = deadheads_->path(u, v);
    step.geometry.reserve(step.vertices.size());
    for (int w : step.vertices) step.geometry.push_back(graph_->vertex(w).position);
    return step;
  }

  const Graph* graph_;
  const DeadheadSource* deadheads_;
};

template <class Legs>
CostDemand route_totals(const Legs& legs, int depot, Arc first, Arc last, double interior_cost,
                        double interior_demand, double lambda) {
  CostDemand out_leg = legs.depot_to_arc(depot, first);
  CostDemand in_leg = legs.arc_to_depot(last, depot);
  return {out_leg.cost + interior_cost + in_leg.cost + lambda,
          out_leg.demand + interior_demand + in_leg.demand};
}

// Direct evaluation of an arbitrary service sequence; the merge caches are
// checked against this in tests and the brute-force oracle is built on it.
template <class Legs>
CostDemand evaluate_route(std::span<const Arc> arcs, int depot, const Legs& legs, double lambda) {
  CostDemand total{lambda, 0.0};
  if (arcs.empty()) return total;
  CostDemand leg = legs.depot_to_arc(depot, arcs.front());
  total.cost += leg.cost;
  total.demand += leg.demand;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    CostDemand svc = legs.service(arcs[i]);
    total.cost += svc.cost;
    total.demand += svc.demand;
    if (i + 1 < arcs.size()) {
      CostDemand hop = legs.inter_arc(arcs[i], arcs[i + 1]);
      total.cost += hop.cost;
      total.demand += hop.demand;
    }
  }
  leg = legs.arc_to_depot(arcs.back(), depot);
  total.cost += leg.cost;
  total.demand += leg.demand;
  return total;
}

// Single-edge route for the cheapest feasible (depot, direction) pair;
// forward wins ties, then the earlier depot. Returns nothing if no pair
// fits within capacity.
template <class Legs>
std::optional<Route> try_init_route(int id, int edge_id, std::span<const int> depots,
                                    const Legs& legs, const RobotParams& params) {
  Route best;
  bool found = false;
  for (int depot : depots) {
    for (Arc a : {Arc{edge_id, Direction::forward}, Arc{edge_id, Direction::reverse}}) {
      CostDemand svc = legs.service(a);
      CostDemand tot = route_totals(legs, depot, a, a, svc.cost, svc.demand, params.lambda);
      if (tot.demand > params.capacity) continue;
      if (found && tot.cost >= best.cost) continue;
      best.id = id;
      best.depot = depot;
      best.arcs = {a};
      best.cost = tot.cost;
      best.demand = tot.demand;
      best.interior_cost[0] = svc.cost;
      best.interior_demand[0] = svc.demand;
      CostDemand rev = legs.service(a.reversed());
      best.interior_cost[1] = rev.cost;
      best.interior_demand[1] = rev.demand;
      found = true;
    }
  }
  if (!found) return std::nullopt;
  return best;
}

template <class Legs>
Route init_route(int id, int edge_id, int depot, const Legs& legs, const RobotParams& params) {
  int depots[1] = {depot};
  auto r = try_init_route(id, edge_id, depots, legs, params);
  if (!r) {
    throw InfeasibleEdge("required edge " + std::to_string(edge_id) +
                         " cannot be serviced within capacity in either direction");
  }
  return *r;
}

// Reverses service order and directions; totals are recomputed since they
// generally differ on asymmetric graphs.
template <class Legs>
Route reverse_route(const Route& r, const Legs& legs, const RobotParams& params) {
  Route out = r;
  std::reverse(out.arcs.begin(), out.arcs.end());
  for (Arc& a : out.arcs) a = a.reversed();
  std::swap(out.interior_cost[0], out.interior_cost[1]);
  std::swap(out.interior_demand[0], out.interior_demand[1]);
  CostDemand tot = route_totals(legs, out.depot, out.front(), out.back(), out.interior_cost[0],
                                out.interior_demand[0], params.lambda);
  out.cost = tot.cost;
  out.demand = tot.demand;
  return out;
}

// Concatenates two routes under the given permutation and depot. Interior
// caches for both orientations are derived from the constituents' caches,
// so the cost carries no accumulated recomputation.
template <class Legs>
Route merge_routes(const Route& p, const Route& q, MergePermutation perm, int depot,
                   const Legs& legs, const RobotParams& params, int new_id) {
  OrientedPart a = orient(perm.q_first() ? q : p, perm.q_first() ? perm.q_reversed() : perm.p_reversed());
  OrientedPart b = orient(perm.q_first() ? p : q, perm.q_first() ? perm.p_reversed() : perm.q_reversed());

  CostDemand link = legs.inter_arc(a.last, b.first);
  CostDemand link_rev = legs.inter_arc(b.first.reversed(), a.last.reversed());

  Route out;
  out.id = new_id;
  out.depot = depot;
  out.interior_cost[0] = a.icost + link.cost + b.icost;
  out.interior_demand[0] = a.idemand + link.demand + b.idemand;
  out.interior_cost[1] = b.icost_rev + link_rev.cost + a.icost_rev;
  out.interior_demand[1] = b.idemand_rev + link_rev.demand + a.idemand_rev;

  const Route& first_part = perm.q_first() ? q : p;
  const Route& second_part = perm.q_first() ? p : q;
  bool first_rev = perm.q_first() ? perm.q_reversed() : perm.p_reversed();
  bool second_rev = perm.q_first() ? perm.p_reversed() : perm.q_reversed();
  out.arcs.reserve(first_part.arcs.size() + second_part.arcs.size());
  auto append = [&out](const Route& part, bool rev) {
    if (rev) {
      for (auto it = part.arcs.rbegin(); it != part.arcs.rend(); ++it) {
        out.arcs.push_back(it->reversed());
      }
    } else {
      out.arcs.insert(out.arcs.end(), part.arcs.begin(), part.arcs.end());
    }
  };
  append(first_part, first_rev);
  append(second_part, second_rev);

  CostDemand tot = route_totals(legs, depot, out.front(), out.back(), out.interior_cost[0],
                                out.interior_demand[0], params.lambda);
  out.cost = tot.cost;
  out.demand = tot.demand;
  return out;
}

// Best of the 8 x |depots| merge candidates with non-negative saving and
// feasible demand; ties prefer the lowest permutation code, then the lowest
// depot id. Returns nothing when no candidate qualifies.
template <class Legs>
std::optional<SavingsEntry> best_merge(const Route& p, const Route& q,
                                       std::span<const int> depots, const Legs& legs,
                                       const RobotParams& params) {
  SavingsEntry best;
  bool found = false;
  for (std::uint8_t code = 0; code < 8; ++code) {
    MergePermutation perm{code};
    OrientedPart a =
        orient(perm.q_first() ? q : p, perm.q_first() ? perm.q_reversed() : perm.p_reversed());
    OrientedPart b =
        orient(perm.q_first() ? p : q, perm.q_first() ? perm.p_reversed() : perm.q_reversed());
    CostDemand link = legs.inter_arc(a.last, b.first);
    double interior_cost = a.icost + link.cost + b.icost;
    double interior_demand = a.idemand + link.demand + b.idemand;
    for (int depot : depots) {
      CostDemand tot =
          route_totals(legs, depot, a.first, b.last, interior_cost, interior_demand, params.lambda);
      if (tot.demand > params.capacity) continue;
      double saving = p.cost + q.cost - tot.cost;
      if (saving < 0.0) continue;
      if (found && saving <= best.saving) continue;
      best.saving = saving;
      best.p = p.id;
      best.q = q.id;
      best.depot = depot;
      best.permutation = perm;
      found = true;
    }
  }
  if (!found) return std::nullopt;
  return best;
}

// Concrete traversal of a route: alternating deadhead/service legs with
// geometry. Zero-length deadheads (shared endpoints) are omitted.
template <class Legs>
std::vector<SolutionStep> expand_route(const Route& r, const Legs& legs) {
  std::vector<SolutionStep> steps;
  if (r.arcs.empty()) return steps;
  if (auto leg = legs.expand_depot_to_arc(r.depot, r.front())) steps.push_back(std::move(*leg));
  for (std::size_t i = 0; i < r.arcs.size(); ++i) {
    steps.push_back(legs.expand_service(r.arcs[i]));
    if (i + 1 < r.arcs.size()) {
      if (auto leg = legs.expand_inter_arc(r.arcs[i], r.arcs[i + 1])) {
        steps.push_back(std::move(*leg));
      }
    }
  }
  if (auto leg = legs.expand_arc_to_depot(r.back(), r.depot)) steps.push_back(std::move(*leg));
  return steps;
}

}  // namespace linecov

#endif  // LINECOV_ROUTE_HPP

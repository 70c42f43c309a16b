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

#ifndef LINECOV_GRAPH_HPP
#define LINECOV_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "linecov/errors.hpp"
#include "linecov/geometry.hpp"

namespace linecov {

struct Vertex {
  int id = 0;
  Vec2 position;
};

enum class Direction : std::uint8_t { forward = 0, reverse = 1 };

// Directed view of an edge; forward means tail -> head.
struct Arc {
  int edge = -1;
  Direction dir = Direction::forward;

  Arc reversed() const {
    return {edge, dir == Direction::forward ? Direction::reverse : Direction::forward};
  }
  friend bool operator==(Arc a, Arc b) { return a.edge == b.edge && a.dir == b.dir; }
};

// Sentinel for "value not given"; filled in by the cost model or rejected
// during final validation.
inline constexpr double kUnsetCost = std::numeric_limits<double>::quiet_NaN();

inline bool is_set(double v) { return v == v; }

struct Edge {
  int id = 0;
  int tail = 0;
  int head = 0;
  bool required = false;

  // Index 0 = forward (tail -> head), 1 = reverse. Service values are only
  // meaningful on required edges.
  double service_cost[2] = {kUnsetCost, kUnsetCost};
  double service_demand[2] = {kUnsetCost, kUnsetCost};
  double deadhead_cost[2] = {kUnsetCost, kUnsetCost};
  double deadhead_demand[2] = {kUnsetCost, kUnsetCost};

  bool is_loop() const { return tail == head; }
};

enum class GraphMode {
  explicit_edges,  // deadheading restricted to listed edges
  complete_fly,    // implicit deadhead edge between every vertex pair
};

// Immutable multigraph instance: vertices with planar coordinates, required
// and non-required edges with direction-dependent costs/demands, and a depot
// vertex set. Construct through build(); the result is safe to share across
// concurrent solver runs.
class Graph {
 public:
  // Validates ids, signs and connectivity, and canonicalizes storage.
  // Values may still be unset here; populate_costs() fills them and
  // finalize_costs() enforces completeness.
  static Graph build(std::vector<Vertex> vertices, std::vector<Edge> edges,
                     std::vector<int> depots, GraphMode mode);

  // Appends one vertex and one required self-loop per point feature. The
  // loop's deadhead cost/demand are zero and its service values are the
  // given ones in both directions. Always creates a fresh vertex, even at
  // duplicate coordinates.
  void add_point_features(const std::vector<Vec2>& points, double service_cost,
                          double service_demand);

  // Checks that every edge carries a full set of finite values; throws
  // MissingServiceValues / NegativeCost otherwise.
  void finalize_costs() const;

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_required() const { return static_cast<int>(required_.size()); }

  const Vertex& vertex(int id) const { return vertices_[static_cast<std::size_t>(id)]; }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& required_edges() const { return required_; }
  const std::vector<int>& depots() const { return depots_; }
  GraphMode mode() const { return mode_; }

  int arc_tail(Arc a) const {
    const Edge& e = edge(a.edge);
    return a.dir == Direction::forward ? e.tail : e.head;
  }
  int arc_head(Arc a) const {
    const Edge& e = edge(a.edge);
    return a.dir == Direction::forward ? e.head : e.tail;
  }
  double service_cost(Arc a) const { return edge(a.edge).service_cost[static_cast<int>(a.dir)]; }
  double service_demand(Arc a) const {
    return edge(a.edge).service_demand[static_cast<int>(a.dir)];
  }
  double deadhead_cost(Arc a) const { return edge(a.edge).deadhead_cost[static_cast<int>(a.dir)]; }
  double deadhead_demand(Arc a) const {
    return edge(a.edge).deadhead_demand[static_cast<int>(a.dir)];
  }

  double edge_length(int id) const {
    const Edge& e = edge(id);
    return distance(vertex(e.tail).position, vertex(e.head).position);
  }

  // Unit travel direction of an arc; zero-length edges have no direction
  // and report heading 0.
  double arc_heading(Arc a) const {
    Vec2 t = vertex(arc_tail(a)).position;
    Vec2 h = vertex(arc_head(a)).position;
    if (t == h) return 0.0;
    return heading_of(h - t);
  }

  // Average of forward/reverse service cost over required edges; the
  // reference quantity for large-benchmark cost differences.
  double average_service_cost() const;

  // Mutable access for the cost model only.
  Edge& mutable_edge(int id) { return edges_[static_cast<std::size_t>(id)]; }

 private:
  Graph() = default;
  void check_connected() const;

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<int> required_;
  std::vector<int> depots_;
  GraphMode mode_ = GraphMode::explicit_edges;
};

// Feasibility pre-check: a required edge is serviceable if some (depot,
// direction) pair yields a single-edge route demand within capacity.
struct ValidationReport {
  struct Offender {
    int edge_id;
    double min_demand;  // best achievable single-edge route demand
  };
  std::vector<Offender> infeasible_edges;
  double capacity = 0.0;

  bool feasible() const { return infeasible_edges.empty(); }
};

}  // namespace linecov

#endif  // LINECOV_GRAPH_HPP

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

#ifndef LINECOV_MEM_HPP
#define LINECOV_MEM_HPP

#include <string>
#include <vector>

#include "linecov/route.hpp"
#include "linecov/solution.hpp"

namespace linecov {

// Heap order: larger saving first; ties broken on (p, q, permutation,
// depot) so extraction order is reproducible.
struct SavingsLess {
  bool operator()(const SavingsEntry& a, const SavingsEntry& b) const {
    if (a.saving != b.saving) return a.saving < b.saving;
    if (a.p != b.p) return a.p > b.p;
    if (a.q != b.q) return a.q > b.q;
    if (a.permutation.code != b.permutation.code) return a.permutation.code > b.permutation.code;
    return a.depot > b.depot;
  }
};

struct MergeReport {
  enum class Status { merged, skipped_dead, done };
  Status status = Status::done;
  int merged_id = -1;
  int p = -1;
  int q = -1;
  double saving = 0.0;
};

// Merge-Embed-Merge: one route per required edge, then greedy merging of
// the best-saving pair off a max-heap with lazy deletion, embedding each
// new route's candidates back into the heap. With a single depot this is
// the plain algorithm; with several it scans all of them at every
// initialization and savings computation.
template <class Legs>
class MemSolver {
 public:
  MemSolver(const Graph& graph, const RobotParams& params, const Legs& legs,
            std::vector<int> depots)
      : graph_(&graph), params_(params), legs_(&legs), depots_(std::move(depots)) {}

  // Builds the per-edge routes and the initial savings heap. Throws
  // InfeasibleEdge when some required edge fits no (depot, direction).
  void initialize() {
    routes_.clear();
    heap_.clear();
    std::vector<int> bad;
    for (int e : graph_->required_edges()) {
      auto r = try_init_route(static_cast<int>(routes_.size()), e, depots_, *legs_, params_);
      if (!r) {
        bad.push_back(e);
        continue;
      }
      routes_.push_back(std::move(*r));
    }
    if (!bad.empty()) {
      std::string msg = "required edges not serviceable within capacity:";
      for (int e : bad) msg += " " + std::to_string(e);
      throw InfeasibleEdge(msg);
    }
    live_ = static_cast<int>(routes_.size());
    for (std::size_t pi = 0; pi < routes_.size(); ++pi) {
      for (std::size_t qi = pi + 1; qi < routes_.size(); ++qi) {
        if (auto entry = best_merge(routes_[pi], routes_[qi], depots_, *legs_, params_)) {
          heap_.push_back(*entry);
        }
      }
    }
    std::make_heap(heap_.begin(), heap_.end(), SavingsLess{});
    initialized_ = true;
  }

  // One heap event: pops the max entry and either discards it (a
  // constituent already died) or merges and embeds the new route.
  MergeReport step() {
    MergeReport report;
    if (heap_.empty()) {
      report.status = MergeReport::Status::done;
      return report;
    }
    std::pop_heap(heap_.begin(), heap_.end(), SavingsLess{});
    SavingsEntry top = heap_.back();
    heap_.pop_back();

    Route& p = routes_[static_cast<std::size_t>(top.p)];
    Route& q = routes_[static_cast<std::size_t>(top.q)];
    if (!p.alive || !q.alive) {
      report.status = MergeReport::Status::skipped_dead;
      return report;
    }

    int new_id = static_cast<int>(routes_.size());
    Route merged =
        merge_routes(p, q, top.permutation, top.depot, *legs_, params_, new_id);
    p.alive = false;
    q.alive = false;
    p.arcs.clear();
    p.arcs.shrink_to_fit();
    q.arcs.clear();
    q.arcs.shrink_to_fit();
    routes_.push_back(std::move(merged));
    --live_;

    const Route& k = routes_.back();
    for (std::size_t i = 0; i < routes_.size() - 1; ++i) {
      const Route& other = routes_[i];
      if (!other.alive) continue;
      if (auto entry = best_merge(k, other, depots_, *legs_, params_)) {
        heap_.push_back(*entry);
        std::push_heap(heap_.begin(), heap_.end(), SavingsLess{});
      }
    }

    report.status = MergeReport::Status::merged;
    report.merged_id = new_id;
    report.p = top.p;
    report.q = top.q;
    report.saving = top.saving;
    return report;
  }

  void run_to_completion() {
    if (!initialized_) initialize();
    while (step().status != MergeReport::Status::done) {
    }
  }

  bool done() const { return heap_.empty(); }

  // Live-route snapshot; valid at any point (the anytime property).
  Solution extract_solution(bool expand_paths = true) const {
    Solution out;
    for (const Route& r : routes_) {
      if (!r.alive) continue;
      SolutionRoute sr;
      sr.depot = r.depot;
      sr.cost = r.cost;
      sr.demand = r.demand;
      sr.arcs = r.arcs;
      if (expand_paths) sr.steps = expand_route(r, *legs_);
      out.total_cost += r.cost;
      out.total_demand += r.demand;
      out.routes.push_back(std::move(sr));
    }
    return out;
  }

  double total_cost() const {
    double total = 0.0;
    for (const Route& r : routes_) {
      if (r.alive) total += r.cost;
    }
    return total;
  }

  int live_count() const { return live_; }
  const std::vector<Route>& routes() const { return routes_; }
  std::size_t heap_size() const { return heap_.size(); }

 private:
  const Graph* graph_;
  RobotParams params_;
  const Legs* legs_;
  std::vector<int> depots_;
  std::vector<Route> routes_;
  std::vector<SavingsEntry> heap_;
  int live_ = 0;
  bool initialized_ = false;
};

// Single-depot Merge-Embed-Merge over plain deadheading costs.
Solution solve_mem(const Graph& graph, const RobotParams& params, const WindModel& wind,
                   int depot);

}  // namespace linecov

#endif  // LINECOV_MEM_HPP

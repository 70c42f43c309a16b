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

#ifndef LINECOV_IO_HPP
#define LINECOV_IO_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "linecov/cost_model.hpp"
#include "linecov/graph.hpp"
#include "linecov/solution.hpp"

namespace linecov {

// A parsed instance: fully populated graph plus the robot and wind
// parameters it was populated with.
struct Instance {
  Graph graph;
  RobotParams params;
  WindModel wind;
};

// Reads the versioned JSON instance format. Unknown or incomplete fields
// raise SchemaError naming the offender; explicit edge values win over
// wind-derived ones.
Instance parse_instance(const std::string& path);
Instance parse_instance_text(const std::string& json_text,
                             const std::string& origin = "<string>");

// Canonical JSON for an instance; parse . write is idempotent.
std::string instance_to_json(const Instance& instance);

struct SolutionMeta {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::string params_hash;
  // Volatile; omitted when unset so identical runs serialize identically.
  std::optional<double> wall_time_s;
};

std::string solution_to_json(const Solution& solution, const SolutionMeta& meta);

// GeoJSON FeatureCollection: one LineString per step (mode and cost in the
// properties), one Point per depot. Curved legs are pre-sampled.
std::string solution_to_geojson(const Solution& solution, const Graph& graph);

// Static rendering: solid service lines, dashed deadheads, one color per
// route, square depot markers.
std::string solution_to_svg(const Solution& solution, const Graph& graph);

// Deterministic hash of the parameters that shape a solution, for the
// solution metadata.
std::string params_fingerprint(const RobotParams& params, const WindModel& wind);

// Seeded road-network-like instance: jittered-grid intersections joined
// into a connected required subgraph, with wind-derived costs and a
// capacity that keeps every edge serviceable.
Instance gen_instance(std::uint64_t seed, int num_required, double area_meters,
                      int depot_count, GraphMode mode);

// GeoJSON LineString/MultiLineString ingestion; endpoints within
// snap_tolerance meters collapse to one vertex. Produces required edges
// only, with default robot parameters.
Instance import_geojson(const std::string& geojson_text, double snap_tolerance = 0.5);

}  // namespace linecov

#endif  // LINECOV_IO_HPP

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

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "linecov/io.hpp"

namespace linecov {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

namespace {

void expect_keys(const json& obj, const std::set<std::string>& allowed,
                 const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw SchemaError("unknown field '" + it.key() + "' in " + where);
    }
  }
}

double require_number(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw SchemaError("missing field '" + key + "' in " + where);
  if (!obj[key].is_number()) throw SchemaError("field '" + key + "' in " + where + " must be a number");
  return obj[key].get<double>();
}

int require_int(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw SchemaError("missing field '" + key + "' in " + where);
  if (!obj[key].is_number_integer()) {
    throw SchemaError("field '" + key + "' in " + where + " must be an integer");
  }
  return obj[key].get<int>();
}

double optional_number(const json& obj, const std::string& key, double fallback,
                       const std::string& where) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) throw SchemaError("field '" + key + "' in " + where + " must be a number");
  return obj[key].get<double>();
}

// Per-direction value pairs must be complete: a required edge with only a
// forward service cost is a schema error, not a half-specified edge.
void read_pair(const json& obj, const char* fwd_key, const char* rev_key, double out[2],
               const std::string& where) {
  const bool has_fwd = obj.contains(fwd_key);
  const bool has_rev = obj.contains(rev_key);
  if (has_fwd != has_rev) {
    throw SchemaError(std::string("field '") + (has_fwd ? rev_key : fwd_key) + "' missing in " +
                      where + " (both directions mandatory)");
  }
  if (has_fwd) {
    out[0] = require_number(obj, fwd_key, where);
    out[1] = require_number(obj, rev_key, where);
  }
}

}  // namespace

Instance parse_instance_text(const std::string& json_text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(origin + ": " + e.what());
  }
  if (!doc.is_object()) throw SchemaError(origin + ": instance must be a JSON object");
  expect_keys(doc, {"format_version", "mode", "vertices", "edges", "depots", "wind", "robot"},
              origin);

  if (require_int(doc, "format_version", origin) != 1) {
    throw SchemaError(origin + ": unsupported format_version");
  }

  GraphMode mode;
  if (!doc.contains("mode") || !doc["mode"].is_string()) {
    throw SchemaError(origin + ": missing or non-string 'mode'");
  }
  const std::string mode_str = doc["mode"].get<std::string>();
  if (mode_str == "explicit-edges") {
    mode = GraphMode::explicit_edges;
  } else if (mode_str == "complete-fly") {
    mode = GraphMode::complete_fly;
  } else {
    throw SchemaError(origin + ": mode must be 'explicit-edges' or 'complete-fly'");
  }

  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw SchemaError(origin + ": missing 'vertices' array");
  }
  std::vector<Vertex> vertices;
  for (const json& jv : doc["vertices"]) {
    const std::string where = "vertex #" + std::to_string(vertices.size());
    expect_keys(jv, {"id", "x", "y"}, where);
    Vertex v;
    v.id = require_int(jv, "id", where);
    v.position = {require_number(jv, "x", where), require_number(jv, "y", where)};
    vertices.push_back(v);
  }

  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw SchemaError(origin + ": missing 'edges' array");
  }
  std::vector<Edge> edges;
  for (const json& je : doc["edges"]) {
    const std::string where = "edge #" + std::to_string(edges.size());
    expect_keys(je,
                {"id", "tail", "head", "required", "service_cost_fwd", "service_cost_rev",
                 "service_demand_fwd", "service_demand_rev", "deadhead_cost_fwd",
                 "deadhead_cost_rev", "deadhead_demand_fwd", "deadhead_demand_rev"},
                where);
    Edge e;
    e.id = require_int(je, "id", where);
    e.tail = require_int(je, "tail", where);
    e.head = require_int(je, "head", where);
    if (!je.contains("required") || !je["required"].is_boolean()) {
      throw SchemaError("missing boolean 'required' in " + where);
    }
    e.required = je["required"].get<bool>();
    read_pair(je, "service_cost_fwd", "service_cost_rev", e.service_cost, where);
    read_pair(je, "service_demand_fwd", "service_demand_rev", e.service_demand, where);
    read_pair(je, "deadhead_cost_fwd", "deadhead_cost_rev", e.deadhead_cost, where);
    read_pair(je, "deadhead_demand_fwd", "deadhead_demand_rev", e.deadhead_demand, where);
    if (!e.required) {
      if (is_set(e.service_cost[0]) || is_set(e.service_demand[0])) {
        throw SchemaError(where + ": service values are only valid on required edges");
      }
      if (e.tail == e.head) {
        throw SchemaError(where + ": self-loops are only valid as required point features");
      }
    }
    edges.push_back(e);
  }

  if (!doc.contains("depots") || !doc["depots"].is_array() || doc["depots"].empty()) {
    throw SchemaError(origin + ": missing non-empty 'depots' array");
  }
  std::vector<int> depots;
  for (const json& jd : doc["depots"]) {
    if (!jd.is_number_integer()) throw SchemaError(origin + ": depots must be vertex ids");
    depots.push_back(jd.get<int>());
  }

  WindModel wind;
  if (doc.contains("wind")) {
    expect_keys(doc["wind"], {"speed", "direction"}, "wind");
    wind.speed = optional_number(doc["wind"], "speed", 0.0, "wind");
    wind.direction = optional_number(doc["wind"], "direction", 0.0, "wind");
    if (wind.speed < 0.0) throw SchemaError("wind speed must be non-negative");
  }

  RobotParams params;
  if (!doc.contains("robot") || !doc["robot"].is_object()) {
    throw SchemaError(origin + ": missing 'robot' object");
  }
  const json& jr = doc["robot"];
  expect_keys(jr,
              {"v_service", "v_deadhead", "capacity", "lambda", "omega_max", "a_max", "delta_max",
               "min_speed", "depot_headings"},
              "robot");
  params.v_service = require_number(jr, "v_service", "robot");
  params.v_deadhead = require_number(jr, "v_deadhead", "robot");
  params.capacity = require_number(jr, "capacity", "robot");
  params.lambda = optional_number(jr, "lambda", 0.0, "robot");
  params.omega_max = optional_number(jr, "omega_max", 0.0, "robot");
  params.a_max = optional_number(jr, "a_max", 0.0, "robot");
  params.delta_max = optional_number(jr, "delta_max", 0.0, "robot");
  params.min_speed = optional_number(jr, "min_speed", 0.0, "robot");
  if (params.v_service <= 0.0 || params.v_deadhead <= 0.0) {
    throw SchemaError("robot speeds must be positive");
  }
  if (params.capacity <= 0.0) throw SchemaError("robot capacity must be positive");
  if (params.lambda < 0.0) throw SchemaError("robot lambda must be non-negative");
  if (jr.contains("depot_headings")) {
    if (!jr["depot_headings"].is_object()) {
      throw SchemaError("robot depot_headings must map vertex ids to radians");
    }
    for (auto it = jr["depot_headings"].begin(); it != jr["depot_headings"].end(); ++it) {
      try {
        params.depot_headings[std::stoi(it.key())] = it.value().get<double>();
      } catch (const std::exception&) {
        throw SchemaError("depot_headings key '" + it.key() + "' is not a vertex id");
      }
    }
  }

  Instance inst{Graph::build(std::move(vertices), std::move(edges), std::move(depots), mode),
                params, wind};
  populate_costs(inst.graph, inst.params, inst.wind);
  return inst;
}

Instance parse_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str(), path);
}

std::string instance_to_json(const Instance& instance) {
  const Graph& g = instance.graph;
  ordered_json doc;
  doc["format_version"] = 1;
  doc["mode"] = g.mode() == GraphMode::complete_fly ? "complete-fly" : "explicit-edges";
  doc["vertices"] = ordered_json::array();
  for (const Vertex& v : g.vertices()) {
    doc["vertices"].push_back({{"id", v.id}, {"x", v.position.x}, {"y", v.position.y}});
  }
  doc["edges"] = ordered_json::array();
  for (const Edge& e : g.edges()) {
    ordered_json je{{"id", e.id}, {"tail", e.tail}, {"head", e.head}, {"required", e.required}};
    if (e.required) {
      je["service_cost_fwd"] = e.service_cost[0];
      je["service_cost_rev"] = e.service_cost[1];
      je["service_demand_fwd"] = e.service_demand[0];
      je["service_demand_rev"] = e.service_demand[1];
    }
    je["deadhead_cost_fwd"] = e.deadhead_cost[0];
    je["deadhead_cost_rev"] = e.deadhead_cost[1];
    je["deadhead_demand_fwd"] = e.deadhead_demand[0];
    je["deadhead_demand_rev"] = e.deadhead_demand[1];
    doc["edges"].push_back(std::move(je));
  }
  doc["depots"] = g.depots();
  doc["wind"] = {{"speed", instance.wind.speed}, {"direction", instance.wind.direction}};
  ordered_json jr{{"v_service", instance.params.v_service},
                  {"v_deadhead", instance.params.v_deadhead},
                  {"capacity", instance.params.capacity},
                  {"lambda", instance.params.lambda},
                  {"omega_max", instance.params.omega_max},
                  {"a_max", instance.params.a_max},
                  {"delta_max", instance.params.delta_max},
                  {"min_speed", instance.params.min_speed}};
  if (!instance.params.depot_headings.empty()) {
    ordered_json headings = ordered_json::object();
    for (const auto& [vertex, heading] : instance.params.depot_headings) {
      headings[std::to_string(vertex)] = heading;
    }
    jr["depot_headings"] = std::move(headings);
  }
  doc["robot"] = std::move(jr);
  return doc.dump(2) + "\n";
}

}  // namespace linecov

// Copyright 2026 The compstruct Authors
//
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

// Text formats: ordering lists, JSON reports and Graphviz DOT.

#pragma once

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "compstruct/boss_employee.hpp"
#include "compstruct/core.hpp"
#include "compstruct/critpair_graph.hpp"
#include "compstruct/dept_partition.hpp"
#include "compstruct/tree_reconstruct.hpp"

namespace compstruct {

using Json = nlohmann::ordered_json;

// Vertex labels separated by any mix of whitespace and commas. Only checks
// the tokens; permutation checks happen when building an Ordering.
inline std::vector<Vertex> parse_labels(std::string_view text) {
  std::vector<Vertex> labels;
  std::size_t i = 0;
  auto is_separator = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  };
  while (i < text.size()) {
    if (is_separator(text[i])) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && !is_separator(text[end])) ++end;
    const std::string_view token = text.substr(i, end - i);
    Vertex value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw InputError("not a vertex label: '" + std::string(token) + "'");
    }
    labels.push_back(value);
    i = end;
  }
  return labels;
}

inline Ordering parse_ordering(std::string_view text) { return Ordering(parse_labels(text)); }

inline Json departments_report(const std::optional<Count>& minimum,
                               const std::optional<DepartmentPartition>& partition,
                               const std::optional<Count>& greedy) {
  Json j;
  j["feasible"] = partition.has_value();
  j["min_departments"] = minimum ? Json(*minimum) : Json(nullptr);
  j["sizes"] = partition ? Json(partition->sizes()) : Json(nullptr);
  j["greedy_departments"] = greedy ? Json(*greedy) : Json(nullptr);
  return j;
}

inline Json interactions_report(const DeptComposition& composition) {
  Json j;
  j["total_employees"] = composition.total_employees();
  j["bosses"] = composition.bosses();
  Json departments = Json::array();
  for (const Department& d : composition.departments()) {
    departments.push_back(Json{{"bosses", d.bosses}, {"employees", d.employees}});
  }
  j["departments"] = std::move(departments);
  return j;
}

inline Json critical_pairs_report(const std::optional<CommunicationGraph>& graph) {
  Json j;
  j["feasible"] = graph.has_value();
  if (graph) {
    Json edges = Json::array();
    for (const Edge& e : graph->edges()) edges.push_back(Json::array({e.u, e.v}));
    j["edges"] = std::move(edges);
    j["critical_pairs_check"] = count_critical_pairs(*graph);
  } else {
    j["edges"] = nullptr;
    j["critical_pairs_check"] = nullptr;
  }
  return j;
}

inline Json hierarchy_report(const std::optional<Hierarchy>& h) {
  Json j;
  j["consistent"] = h.has_value();
  j["parent"] = h ? Json(h->parents()) : Json(nullptr);
  return j;
}

// Undirected DOT; bridges are drawn bold red.
inline std::string to_dot(const CommunicationGraph& g) {
  const auto bridges = find_bridges(g);
  std::ostringstream os;
  os << "graph communication {\n";
  for (Vertex v = 1; v <= g.vertices(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) {
    os << "  " << e.u << " -- " << e.v;
    if (std::binary_search(bridges.begin(), bridges.end(), e)) {
      os << " [style=bold, color=red]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

// Directed DOT with edges from boss to subordinate.
inline std::string to_dot(const Hierarchy& h) {
  std::ostringstream os;
  os << "digraph hierarchy {\n";
  os << "  " << h.root() << ";\n";
  for (Vertex v = 1; v <= h.size(); ++v) {
    if (h.parent(v) != kNoParent) os << "  " << h.parent(v) << " -> " << v << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace compstruct

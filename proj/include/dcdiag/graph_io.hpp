// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "dcdiag/diagnosis.hpp"
#include "dcdiag/graph.hpp"

namespace dcdiag {

using json = nlohmann::ordered_json;

/// {"vertex_count": N, "edges": [[u,v],...], "labels": {"0": "...", ...}}
/// with u < v and edges sorted; "labels" is omitted for unlabeled graphs.
inline json graph_to_json(const Graph& g) {
  json j;
  j["vertex_count"] = g.vertex_count();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) {
    json labels = json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v) labels[std::to_string(v)] = std::string(g.label(v));
    j["labels"] = std::move(labels);
  }
  return j;
}

inline Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertex_count") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs \"vertex_count\" and \"edges\"");
  const auto n = j.at("vertex_count").get<std::size_t>();
  GraphBuilder b(n);
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph JSON edge must be [u, v]");
    b.add_edge(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  if (j.contains("labels")) {
    for (const auto& [key, value] : j.at("labels").items()) {
      std::size_t pos = 0;
      unsigned long id = std::stoul(key, &pos);
      if (pos != key.size() || id >= n) throw std::invalid_argument("graph JSON label key out of range: " + key);
      b.set_label(static_cast<Vertex>(id), value.get<std::string>());
    }
  }
  return std::move(b).build();
}

inline std::string to_dot(const Graph& g, const std::string& name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (g.has_labels()) out << " [label=\"" << g.label(v) << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

inline json to_json(const VertexSet& s) { return json(s.ids()); }

inline VertexSet vertex_set_from_json(const json& j) { return VertexSet(j.get<std::vector<Vertex>>()); }

inline json test_to_json(const Test& t, Model model) {
  if (model == Model::pmc) return json::array({t.tester, t.u});
  return json::array({t.tester, t.u, t.v});
}

/// {"model": "pmc"|"mm", "outcomes": [[test, bit], ...]} in canonical test
/// order; a PMC test is [tester, testee], an MM test [comparator, u, v].
inline json syndrome_to_json(const Graph& g, const Syndrome& s) {
  const auto tests = build_tests(g, s.model);
  if (tests.size() != s.outcomes.size()) throw std::invalid_argument("syndrome does not match the graph");
  json outcomes = json::array();
  for (std::size_t i = 0; i < tests.size(); ++i) outcomes.push_back({test_to_json(tests[i], s.model), s.outcomes[i]});
  return json{{"model", std::string(to_string(s.model))}, {"outcomes", std::move(outcomes)}};
}

/// Accepts outcomes in any order but requires every test exactly once.
inline Syndrome syndrome_from_json(const Graph& g, const json& j) {
  auto model = parse_model(j.at("model").get<std::string>());
  if (!model) throw std::invalid_argument("unknown syndrome model");
  const auto tests = build_tests(g, *model);
  Syndrome s{*model, std::vector<std::uint8_t>(tests.size(), 0)};
  std::vector<bool> seen(tests.size(), false);
  const auto& outcomes = j.at("outcomes");
  if (outcomes.size() != tests.size())
    throw std::invalid_argument("syndrome has " + std::to_string(outcomes.size()) + " outcomes, test set has " +
                                std::to_string(tests.size()));
  for (const auto& entry : outcomes) {
    const auto ids = entry.at(0).get<std::vector<Vertex>>();
    Test t;
    if (*model == Model::pmc && ids.size() == 2) {
      t = {ids[0], ids[1], ids[1]};
    } else if (*model == Model::mm && ids.size() == 3) {
      t = {ids[0], std::min(ids[1], ids[2]), std::max(ids[1], ids[2])};
    } else {
      throw std::invalid_argument("malformed syndrome test");
    }
    auto it = std::lower_bound(tests.begin(), tests.end(), t);
    if (it == tests.end() || *it != t) throw std::invalid_argument("syndrome names a test not in the test set");
    const auto idx = static_cast<std::size_t>(it - tests.begin());
    if (seen[idx]) throw std::invalid_argument("syndrome repeats a test");
    seen[idx] = true;
    const auto bit = entry.at(1).get<int>();
    if (bit != 0 && bit != 1) throw std::invalid_argument("syndrome outcome must be 0 or 1");
    s.outcomes[idx] = static_cast<std::uint8_t>(bit);
  }
  return s;
}

}  // namespace dcdiag

#pragma once

// File formats: trees with multiplicities, raw graphs, and orientation
// records. Everything is JSON; orientation bits travel as the hex form so
// records stay short and diffable. Loaders re-derive the canonical
// multiplication and verify the recorded graph hash, so a record cannot be
// silently applied to the wrong graph.

#include <fstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "orient5/common.hpp"
#include "orient5/graph.hpp"
#include "orient5/multiplication.hpp"
#include "orient5/orientation.hpp"
#include "orient5/profile.hpp"

namespace orient5 {

using json = nlohmann::ordered_json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_input("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail_input("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) fail_input("cannot write '" + path + "'");
  out << content;
  if (!out) fail_input("write to '" + path + "' failed");
}

namespace detail {

inline std::vector<std::pair<std::string, std::string>> edge_pairs_from_json(const json& j) {
  if (!j.is_array() || j.empty()) fail_input("\"edges\" must be a non-empty array");
  std::vector<std::pair<std::string, std::string>> edges;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      fail_input("each edge must be a two-string array, got " + e.dump());
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return edges;
}

inline json edges_to_json(const Graph& g) {
  json arr = json::array();
  for (auto [u, v] : g.edges) arr.push_back({g.names[u], g.names[v]});
  return arr;
}

}  // namespace detail

// {"edges": [["u","w"], ...]} with no multiplicities: a plain graph.
inline Graph graph_from_json(const json& j) {
  try {
    return graph_from_name_edges(detail::edge_pairs_from_json(j.at("edges")));
  } catch (const nlohmann::json::exception& e) {
    fail_input(std::string("bad graph JSON: ") + e.what());
  }
}

inline json graph_to_json(const Graph& g) {
  json j;
  j["edges"] = detail::edges_to_json(g);
  return j;
}

// {"edges": [...], "multiplicities": {"u": 2, ...}}. Multiplicities are
// optional and default to 2 per vertex; unknown keys are rejected.
inline std::pair<ParentTree, MultiplicityMap> tree_from_json(const json& j) {
  try {
    ParentTree t = tree_from_edges(detail::edge_pairs_from_json(j.at("edges")));
    MultiplicityMap s;
    for (const auto& name : t.names) s[name] = 2;
    if (j.contains("multiplicities")) {
      const json& ms = j.at("multiplicities");
      if (!ms.is_object()) fail_input("\"multiplicities\" must be an object");
      for (const auto& [key, val] : ms.items()) {
        if (!val.is_number_integer())
          fail_input("multiplicity of '" + key + "' must be an integer");
        if (s.find(key) == s.end())
          fail_input("multiplicity given for unknown vertex '" + key + "'");
        s[key] = val.get<int>();
      }
    }
    validate_multiplicities(t, s, 1);
    return {std::move(t), std::move(s)};
  } catch (const nlohmann::json::exception& e) {
    fail_input(std::string("bad tree JSON: ") + e.what());
  }
}

inline json tree_to_json(const ParentTree& t, const MultiplicityMap& s) {
  json j;
  j["edges"] = detail::edges_to_json(t);
  json ms = json::object();
  for (const auto& [name, v] : s) ms[name] = v;
  j["multiplicities"] = ms;
  return j;
}

// A complete, verifiable orientation of a multiplication: the parent tree,
// the multiplicities, the hash of the canonical multiplication, and the
// orientation bits in hex.
inline json orientation_record(const MultiGraph& g, const Orientation& o) {
  check_base(g, o);
  json rec;
  rec["edges"] = detail::edges_to_json(g.parent);
  json ms = json::object();
  for (const auto& [name, v] : g.s) ms[name] = v;
  rec["multiplicities"] = ms;
  rec["graph_hash"] = hex_u64(graph_hash(g));
  rec["orientation_hex"] = orientation_to_hex(g, o);
  return rec;
}

inline std::pair<MultiGraph, Orientation> orientation_record_load(const json& rec) {
  try {
    auto [tree, mult] = tree_from_json(rec);
    MultiGraph g = multiply(tree, mult);
    const std::string want = rec.at("graph_hash").get<std::string>();
    if (hex_u64(graph_hash(g)) != want)
      fail_input("record graph_hash " + want + " does not match the rebuilt multiplication " +
                 hex_u64(graph_hash(g)));
    Orientation o = orientation_from_hex(g, rec.at("orientation_hex").get<std::string>());
    return {std::move(g), std::move(o)};
  } catch (const nlohmann::json::exception& e) {
    fail_input(std::string("bad orientation record: ") + e.what());
  }
}

}  // namespace orient5

#pragma once

// Graphviz DOT export with deterministic vertex and edge order, plus a reader
// for the exact subset this library emits (used for round-trip checks).

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "orient5/graph.hpp"
#include "orient5/orientation.hpp"

namespace orient5 {

inline std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph g {\n";
  for (const auto& nm : g.names) os << "  \"" << nm << "\";\n";
  for (const auto& [a, b] : g.edges)
    os << "  \"" << g.names[a] << "\" -- \"" << g.names[b] << "\";\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const Graph& g, const Orientation& o) {
  check_base(g, o);
  std::ostringstream os;
  os << "digraph d {\n";
  for (const auto& nm : g.names) os << "  \"" << nm << "\";\n";
  for (int e = 0; e < g.edge_count(); ++e)
    os << "  \"" << g.names[arc_tail(g, o, e)] << "\" -> \"" << g.names[arc_head(g, o, e)]
       << "\";\n";
  os << "}\n";
  return os.str();
}

// Parses `"a" -> "b";` / `"a" -- "b";` lines as emitted above.
inline std::vector<std::pair<std::string, std::string>> parse_dot_pairs(const std::string& text,
                                                                        bool directed) {
  const std::string sep = directed ? "->" : "--";
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream is(text);
  std::string line;
  auto quoted = [](const std::string& s, size_t from, std::string& val, size_t& end) {
    size_t a = s.find('"', from);
    if (a == std::string::npos) return false;
    size_t b = s.find('"', a + 1);
    if (b == std::string::npos) return false;
    val = s.substr(a + 1, b - a - 1);
    end = b + 1;
    return true;
  };
  while (std::getline(is, line)) {
    size_t pos = line.find(sep);
    if (pos == std::string::npos) continue;
    std::string u, v;
    size_t end;
    if (!quoted(line, 0, u, end) || end > pos) continue;
    if (!quoted(line, pos + sep.size(), v, end)) continue;
    out.push_back({u, v});
  }
  return out;
}

// Rebuilds an orientation of g from a digraph in our DOT subset. Every edge
// of g must appear exactly once.
inline Orientation orientation_from_dot(const Graph& g, const std::string& text) {
  auto arcs = parse_dot_pairs(text, true);
  std::vector<bool> bits(g.edge_count(), false);
  std::vector<bool> seen(g.edge_count(), false);
  for (const auto& [un, vn] : arcs) {
    int u = g.vertex(un), v = g.vertex(vn);
    int e = g.edge_between(u, v);
    if (e < 0) fail_input("DOT arc over a non-edge: " + un + " -> " + vn);
    if (seen[e]) fail_input("DOT orients edge twice: " + un + " -> " + vn);
    seen[e] = true;
    bits[e] = (g.edges[e].first == u);
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (!seen[e])
      fail_input("DOT leaves an edge unoriented: [" + g.names[g.edges[e].first] + ", " +
                 g.names[g.edges[e].second] + "]");
  return make_orientation(g, std::move(bits));
}

}  // namespace orient5

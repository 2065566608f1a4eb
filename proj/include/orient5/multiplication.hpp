#pragma once

// Vertex multiplication: every parent vertex v with multiplicity s(v) becomes
// clones v#1..v#s(v); clones of u and v are adjacent exactly when uv is a
// parent edge. Clones of the same parent form an independent set.

#include <string>
#include <utility>
#include <vector>

#include "orient5/graph.hpp"
#include "orient5/profile.hpp"

namespace orient5 {

struct CloneVertex {
  std::string parent;
  int index = 0;  // 1-based
  std::string label() const { return parent + "#" + std::to_string(index); }
  friend bool operator==(const CloneVertex& a, const CloneVertex& b) {
    return a.parent == b.parent && a.index == b.index;
  }
  friend bool operator<(const CloneVertex& a, const CloneVertex& b) {
    return a.parent != b.parent ? a.parent < b.parent : a.index < b.index;
  }
};

struct MultiGraph : Graph {
  ParentTree parent;
  MultiplicityMap s;
  std::vector<int> parent_vertex;  // multigraph vertex id -> parent vertex id
  std::vector<int> clone_index;    // 1-based clone number
  std::vector<std::vector<int>> clones_by_parent;

  CloneVertex clone_of(int v) const { return {parent.names[parent_vertex[v]], clone_index[v]}; }

  int vertex_of(const CloneVertex& c) const {
    int pv = parent.vertex(c.parent);
    const auto& clones = clones_by_parent[pv];
    if (c.index < 1 || c.index > static_cast<int>(clones.size()))
      fail_input("clone index out of range: " + c.label());
    return clones[c.index - 1];
  }
};

// Canonical vertex order of the product: (parent vertex order, clone index).
inline MultiGraph multiply(const ParentTree& parent, const MultiplicityMap& s) {
  validate_multiplicities(parent, s, 1);
  MultiGraph mg;
  mg.parent = parent;
  mg.s = s;

  std::vector<std::string> names;
  mg.clones_by_parent.assign(parent.vertex_count(), {});
  for (int pv = 0; pv < parent.vertex_count(); ++pv) {
    int count = s.at(parent.names[pv]);
    for (int i = 1; i <= count; ++i) {
      mg.clones_by_parent[pv].push_back(static_cast<int>(names.size()));
      names.push_back(parent.names[pv] + "#" + std::to_string(i));
      mg.parent_vertex.push_back(pv);
      mg.clone_index.push_back(i);
    }
  }

  std::vector<std::pair<int, int>> edge_list;
  for (const auto& [pa, pb] : parent.edges)
    for (int u : mg.clones_by_parent[pa])
      for (int v : mg.clones_by_parent[pb]) edge_list.push_back({u, v});

  static_cast<Graph&>(mg) = make_graph(std::move(names), std::move(edge_list));
  return mg;
}

inline int edge_id(const MultiGraph& g, const CloneVertex& u, const CloneVertex& v) {
  int e = g.edge_between(g.vertex_of(u), g.vertex_of(v));
  if (e < 0) fail_input("no edge between " + u.label() + " and " + v.label());
  return e;
}

inline std::pair<CloneVertex, CloneVertex> edge_clones(const MultiGraph& g, int e) {
  if (e < 0 || e >= g.edge_count()) fail_input("edge id out of range");
  return {g.clone_of(g.edges[e].first), g.clone_of(g.edges[e].second)};
}

}  // namespace orient5

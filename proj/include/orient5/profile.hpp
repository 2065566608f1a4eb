#pragma once

// Structural profile of a diameter-5 tree: the two adjacent centers, the
// branch vertices next to each center, and the deep vertices behind each
// branch. Every vertex of such a tree falls into exactly one of those roles.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "orient5/common.hpp"
#include "orient5/graph.hpp"

namespace orient5 {

using MultiplicityMap = std::map<std::string, int>;

inline void validate_multiplicities(const Graph& g, const MultiplicityMap& s, int min_value) {
  for (const auto& [name, value] : s) {
    if (g.index_of.find(name) == g.index_of.end())
      fail_input("multiplicity given for unknown vertex '" + name + "'");
    if (value < min_value)
      fail_input("multiplicity of '" + name + "' is " + std::to_string(value) +
                 ", minimum here is " + std::to_string(min_value));
    if (value > 4096) fail_input("multiplicity of '" + name + "' is unreasonably large");
  }
  for (const auto& nm : g.names)
    if (s.find(nm) == s.end()) fail_input("multiplicity missing for vertex '" + nm + "'");
}

inline MultiplicityMap uniform_multiplicity(const Graph& g, int value) {
  MultiplicityMap s;
  for (const auto& nm : g.names) s[nm] = value;
  return s;
}

struct Diam5Profile {
  enum class Role { Center, Branch, Deep };
  struct Placement {
    Role role;
    int side;            // 0 or 1
    std::string branch;  // owning branch for Branch/Deep roles, empty for centers
  };

  std::string c1, c2;  // adjacent centers, c1 lexicographically smaller
  std::array<std::vector<std::string>, 2> branches;       // per side, sorted
  std::map<std::string, std::vector<std::string>> deep;   // branch -> deep vertices, sorted
  std::array<std::vector<std::string>, 2> nl;             // non-leaf branches per side
  std::array<int, 2> m{0, 0};  // min multiplicity over nl[k]
  std::map<std::string, Placement> placement;

  const std::string& center(int side) const { return side == 0 ? c1 : c2; }
};

inline Diam5Profile profile_diam5(const ParentTree& t, const MultiplicityMap& s) {
  validate_multiplicities(t, s, 1);
  int d = diameter(t);
  if (d != 5) fail_pre("tree diameter is " + std::to_string(d) + ", expected 5");

  Diam5Profile p;
  auto centers = center_names(t);
  // Odd diameter forces exactly two adjacent centers.
  if (centers.size() != 2) fail_internal("diameter-5 tree without exactly two centers");
  p.c1 = centers[0];
  p.c2 = centers[1];
  if (t.edge_between(t.vertex(p.c1), t.vertex(p.c2)) < 0)
    fail_internal("centers of a diameter-5 tree must be adjacent");

  p.placement[p.c1] = {Diam5Profile::Role::Center, 0, ""};
  p.placement[p.c2] = {Diam5Profile::Role::Center, 1, ""};

  for (int side = 0; side < 2; ++side) {
    int cv = t.vertex(p.center(side));
    int other = t.vertex(p.center(1 - side));
    for (auto [w, e] : t.adj[cv]) {
      (void)e;
      if (w == other) continue;
      const std::string& bname = t.names[w];
      p.branches[side].push_back(bname);
      p.placement[bname] = {Diam5Profile::Role::Branch, side, bname};
      std::vector<std::string>& dp = p.deep[bname];
      for (auto [x, e2] : t.adj[w]) {
        (void)e2;
        if (x == cv) continue;
        dp.push_back(t.names[x]);
        p.placement[t.names[x]] = {Diam5Profile::Role::Deep, side, bname};
      }
      if (!dp.empty()) p.nl[side].push_back(bname);
    }
  }
  // Adjacency lists are id-sorted and ids are lexicographic for trees, so the
  // branch and deep lists above are already in canonical order.

  if (static_cast<int>(p.placement.size()) != t.vertex_count())
    fail_internal("center/branch/deep roles do not partition the tree");
  if (p.nl[0].empty() || p.nl[1].empty())
    fail_internal("diameter-5 tree must have a non-leaf branch on each side");

  for (int side = 0; side < 2; ++side) {
    int mv = kInfDist;
    for (const auto& b : p.nl[side]) mv = std::min(mv, s.at(b));
    p.m[side] = mv;
  }
  return p;
}

}  // namespace orient5

#pragma once

// Shared fixtures plus independent reference implementations. The reference
// code stays deliberately different from the library: Floyd-Warshall instead
// of BFS, delete-and-probe bridge finding instead of low-links, and raw 2^m
// sweeps instead of the pruned enumeration, so each side checks the other.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orient5/graph.hpp"
#include "orient5/orientation.hpp"
#include "orient5/profile.hpp"
#include "orient5/treegen.hpp"

namespace testutil {

using namespace orient5;

// --- fixtures ---------------------------------------------------------------

// Diameter-5 tree with an uneven branch structure: side va has two non-leaf
// branches (two and one deep vertices), side vb has a leaf branch plus one
// branch carrying three deep vertices. With all multiplicities 2 this lands
// in the lone-non-leaf row.
inline ParentTree fig_tree() {
  return tree_from_edges({
      {"va", "vb"},
      {"va", "va.1"},
      {"va", "va.2"},
      {"vb", "vb.1"},
      {"vb", "vb.2"},
      {"va.1", "va.1.1"},
      {"va.1", "va.1.2"},
      {"va.2", "va.2.1"},
      {"vb.2", "vb.2.1"},
      {"vb.2", "vb.2.2"},
      {"vb.2", "vb.2.3"},
  });
}

inline MultiplicityMap with_overrides(const Graph& g, int base,
                                      const std::vector<std::pair<std::string, int>>& over) {
  MultiplicityMap s = uniform_multiplicity(g, base);
  for (const auto& [name, v] : over) s.at(name) = v;
  return s;
}

// Random tree plus up to `extra` chords.
inline Graph random_connected_graph(int n, int extra, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("g" + std::to_string(i));
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(std::max(0, n - 2));
  for (int& v : code) v = pick(rng);
  ParentTree t = tree_from_prufer(code, names);
  std::set<std::pair<int, int>> have(t.edges.begin(), t.edges.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : t.edges) edges.push_back({t.names[u], t.names[v]});
  int added = 0;
  for (int tries = 0; tries < 200 && added < extra; ++tries) {
    int u = pick(rng), v = pick(rng);
    if (u == v) continue;
    auto key = std::minmax(u, v);
    if (have.count({key.first, key.second})) continue;
    have.insert({key.first, key.second});
    edges.push_back({t.names[u], t.names[v]});
    ++added;
  }
  return graph_from_name_edges(edges);
}

// --- independent distance code ----------------------------------------------

constexpr int kRefInf = 1 << 28;

inline std::vector<std::vector<int>> ref_directed_apsp(const Graph& g, const Orientation& o) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kRefInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [lo, hi] = g.edges[e];
    if (o.bits[e]) d[lo][hi] = 1;
    else d[hi][lo] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::vector<std::vector<int>> ref_undirected_apsp(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kRefInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [lo, hi] : g.edges) d[lo][hi] = d[hi][lo] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Diameter from the reference APSP; kInfDist when some pair is unreachable.
inline int ref_directed_diameter(const Graph& g, const Orientation& o) {
  auto d = ref_directed_apsp(g, o);
  int worst = 0;
  for (const auto& row : d)
    for (int x : row) {
      if (x >= kRefInf) return kInfDist;
      worst = std::max(worst, x);
    }
  return worst;
}

inline bool ref_strong(const Graph& g, const Orientation& o) {
  return ref_directed_diameter(g, o) != kInfDist;
}

inline int ref_undirected_diameter(const Graph& g) {
  auto d = ref_undirected_apsp(g);
  int worst = 0;
  for (const auto& row : d)
    for (int x : row) {
      if (x >= kRefInf) return kInfDist;
      worst = std::max(worst, x);
    }
  return worst;
}

// --- delete-and-probe bridge finder ------------------------------------------

inline bool ref_connected_without(const Graph& g, int skip_edge) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<int> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, e] : g.adj[v]) {
      if (e == skip_edge || seen[w]) continue;
      seen[w] = 1;
      ++count;
      stack.push_back(w);
    }
  }
  return count == n;
}

inline std::vector<int> ref_bridges(const Graph& g) {
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!ref_connected_without(g, e)) out.push_back(e);
  return out;
}

// --- raw orientation sweep ----------------------------------------------------

inline Orientation orientation_of_value_ref(const Graph& g, uint64_t value) {
  const int m = g.edge_count();
  std::vector<bool> bits(m);
  for (int e = 0; e < m; ++e) bits[e] = (value >> (m - 1 - e)) & 1u;
  return make_orientation(g, std::move(bits));
}

struct RefSweep {
  int min_diameter = kInfDist;
  std::optional<uint64_t> best_value;  // smallest value achieving it
  uint64_t strong_count = 0;
};

// Full 2^m sweep with the reference APSP; only usable for small m.
inline RefSweep ref_min_diameter_sweep(const Graph& g) {
  RefSweep out;
  const int m = g.edge_count();
  for (uint64_t v = 0; v < (uint64_t{1} << m); ++v) {
    int d = ref_directed_diameter(g, orientation_of_value_ref(g, v));
    if (d == kInfDist) continue;
    ++out.strong_count;
    if (d < out.min_diameter) {
      out.min_diameter = d;
      out.best_value = v;
    }
  }
  return out;
}

// --- canonical forms and enumeration -----------------------------------------

inline std::string ahu_rooted(const ParentTree& t, int v, int from) {
  std::vector<std::string> kids;
  for (auto [w, e] : t.adj[v]) {
    (void)e;
    if (w != from) kids.push_back(ahu_rooted(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  s += ")";
  return s;
}

// Isomorphism-invariant string for an unlabeled tree: root at the (one or
// two) center vertices and take the smaller encoding.
inline std::string ahu_canonical(const ParentTree& t) {
  std::string best;
  for (int c : center(t)) {
    std::string s = ahu_rooted(t, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// --- randomized instances -----------------------------------------------------

// Random diameter-5 tree with n vertices and multiplicities drawn from
// {2, 3, 4}. Deterministic in the seed.
inline std::pair<ParentTree, MultiplicityMap> random_d5_instance(int n, uint64_t seed) {
  ParentTree t = gen_random_d5(n, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> pick(2, 4);
  MultiplicityMap s;
  for (const auto& nm : t.names) s[nm] = pick(rng);
  return {std::move(t), std::move(s)};
}

}  // namespace testutil

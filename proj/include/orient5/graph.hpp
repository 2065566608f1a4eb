#pragma once

// Undirected labeled graphs and trees: construction with a canonical vertex
// and edge order, BFS distances, eccentricity machinery, bridge detection.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orient5/common.hpp"

namespace orient5 {

struct Graph {
  // Vertex ids follow `names`; edge ids follow `edges`, which is sorted by
  // (lo, hi) endpoint ids. Adjacency lists are sorted by neighbor id.
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, edge id)
  std::map<std::string, int> index_of;
  std::map<std::pair<int, int>, int> edge_index;

  int vertex_count() const { return static_cast<int>(names.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  int vertex(const std::string& name) const {
    auto it = index_of.find(name);
    if (it == index_of.end()) fail_input("unknown vertex: " + name);
    return it->second;
  }

  // -1 when there is no edge between u and v.
  int edge_between(int u, int v) const {
    std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    auto it = edge_index.find(key);
    return it == edge_index.end() ? -1 : it->second;
  }

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

// `names` fixes the canonical vertex order; edges are canonicalized here.
inline Graph make_graph(std::vector<std::string> names, std::vector<std::pair<int, int>> edge_list) {
  Graph g;
  g.names = std::move(names);
  const int n = g.vertex_count();
  for (int i = 0; i < n; ++i) {
    const std::string& nm = g.names[i];
    if (nm.empty() || nm.find_first_of("\" \t\r\n\\") != std::string::npos)
      fail_input("invalid vertex name: '" + nm + "'");
    if (!g.index_of.emplace(nm, i).second) fail_input("duplicate vertex name: " + nm);
  }
  for (auto& [a, b] : edge_list) {
    if (a < 0 || b < 0 || a >= n || b >= n) fail_internal("edge endpoint out of range");
    if (a == b) fail_input("self-loop at vertex '" + g.names[a] + "'");
    if (a > b) std::swap(a, b);
  }
  std::sort(edge_list.begin(), edge_list.end());
  for (size_t i = 1; i < edge_list.size(); ++i)
    if (edge_list[i] == edge_list[i - 1])
      fail_input("duplicate edge [" + g.names[edge_list[i].first] + ", " +
                 g.names[edge_list[i].second] + "]");
  g.edges = std::move(edge_list);
  g.adj.assign(n, {});
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edges[e];
    g.adj[a].push_back({b, e});
    g.adj[b].push_back({a, e});
    g.edge_index[{a, b}] = e;
  }
  for (auto& lst : g.adj) std::sort(lst.begin(), lst.end());
  return g;
}

// Vertices are inferred from the edge list and ordered lexicographically.
inline Graph graph_from_name_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
  std::set<std::string> nameset;
  for (const auto& [a, b] : edges) {
    if (a == b) fail_input("self-loop at vertex '" + a + "'");
    nameset.insert(a);
    nameset.insert(b);
  }
  std::vector<std::string> names(nameset.begin(), nameset.end());
  std::map<std::string, int> idx;
  for (size_t i = 0; i < names.size(); ++i) idx[names[i]] = static_cast<int>(i);
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> edge_ids;
  for (const auto& [a, b] : edges) {
    int u = idx[a], v = idx[b];
    std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) fail_input("duplicate edge [" + a + ", " + b + "]");
    edge_ids.push_back(key);
  }
  return make_graph(std::move(names), std::move(edge_ids));
}

// Fingerprint over the canonical description; clone labels make multiplicity
// part of the image, so one hash function serves every graph flavor here.
inline uint64_t graph_hash(const Graph& g) {
  uint64_t h = fnv1a_append(kFnvOffset, "graph/v1;");
  for (const auto& nm : g.names) h = fnv1a_append(h, nm + ";");
  for (const auto& [a, b] : g.edges)
    h = fnv1a_append(h, std::to_string(a) + "-" + std::to_string(b) + ";");
  return h;
}

inline std::vector<int> bfs_distances(const Graph& g, int source) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n) fail_input("bfs source out of range");
  std::vector<int> dist(n, kInfDist);
  std::vector<int> queue;
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(source);
  for (size_t h = 0; h < queue.size(); ++h) {
    int u = queue[h];
    for (auto [v, e] : g.adj[u]) {
      (void)e;
      if (dist[v] == kInfDist) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

inline std::vector<int> bfs_distances(const Graph& g, const std::string& source) {
  return bfs_distances(g, g.vertex(source));
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), kInfDist) == dist.end();
}

inline std::vector<int> eccentricities(const Graph& g) {
  if (!is_connected(g)) fail_pre("graph is disconnected");
  const int n = g.vertex_count();
  std::vector<int> ecc(n, 0);
  for (int v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    ecc[v] = *std::max_element(dist.begin(), dist.end());
  }
  return ecc;
}

inline int diameter(const Graph& g) {
  auto ecc = eccentricities(g);
  return ecc.empty() ? 0 : *std::max_element(ecc.begin(), ecc.end());
}

inline int radius(const Graph& g) {
  auto ecc = eccentricities(g);
  return ecc.empty() ? 0 : *std::min_element(ecc.begin(), ecc.end());
}

inline std::vector<int> center(const Graph& g) {
  auto ecc = eccentricities(g);
  int r = ecc.empty() ? 0 : *std::min_element(ecc.begin(), ecc.end());
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (ecc[v] == r) out.push_back(v);
  return out;
}

inline std::vector<std::string> center_names(const Graph& g) {
  std::vector<std::string> out;
  for (int v : center(g)) out.push_back(g.names[v]);
  return out;
}

// Bridge edges via DFS low-links.
inline std::vector<int> bridge_edge_ids(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<int> out;
  int timer = 0;
  // Iterative DFS; each frame remembers the edge it entered through so that
  // parallel edges are never an issue (edge ids are unique).
  struct Frame {
    int v;
    int via_edge;
    size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (order[root] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    order[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < g.adj[f.v].size()) {
        auto [w, e] = g.adj[f.v][f.next++];
        if (e == f.via_edge) continue;
        if (order[w] == -1) {
          order[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], order[w]);
        }
      } else {
        int v = f.v, via = f.via_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > order[p]) out.push_back(via);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_bridgeless(const Graph& g) {
  if (!is_connected(g)) fail_pre("graph is disconnected");
  return bridge_edge_ids(g).empty();
}

struct ParentTree : Graph {};

inline ParentTree make_tree(Graph g) {
  if (g.vertex_count() < 2) fail_input("tree needs at least two vertices");
  for (const auto& nm : g.names)
    if (nm.find('#') != std::string::npos)
      fail_input("vertex name may not contain '#': '" + nm + "'");
  if (!is_connected(g)) fail_input("edge list does not describe a connected tree");
  if (g.edge_count() != g.vertex_count() - 1)
    fail_input("edge list has a cycle: " + std::to_string(g.edge_count()) + " edges on " +
               std::to_string(g.vertex_count()) + " vertices");
  ParentTree t;
  static_cast<Graph&>(t) = std::move(g);
  return t;
}

inline ParentTree tree_from_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
  if (edges.empty()) fail_input("tree needs at least one edge");
  return make_tree(graph_from_name_edges(edges));
}

// Vertices with at least two distinct vertices at distance exactly 5.
inline std::vector<std::string> a_set(const ParentTree& t) {
  std::vector<std::string> out;
  for (int v = 0; v < t.vertex_count(); ++v) {
    auto dist = bfs_distances(t, v);
    int far = static_cast<int>(std::count(dist.begin(), dist.end(), 5));
    if (far >= 2) out.push_back(t.names[v]);
  }
  return out;
}

}  // namespace orient5

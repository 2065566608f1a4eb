#pragma once

// Orientations of an undirected graph, one bit per edge id. Bit 1 points the
// arc from the canonically smaller endpoint to the larger one. An orientation
// is a value object; every operation takes the base graph alongside it and
// verifies the pairing through the base-graph fingerprint.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "orient5/common.hpp"
#include "orient5/graph.hpp"
#include "orient5/multiplication.hpp"
#include "orient5/profile.hpp"

namespace orient5 {

struct Orientation {
  std::vector<bool> bits;
  uint64_t base_hash = 0;
};

inline Orientation make_orientation(const Graph& g, std::vector<bool> bits) {
  if (static_cast<int>(bits.size()) != g.edge_count())
    fail_input("orientation bit count does not match edge count");
  return Orientation{std::move(bits), graph_hash(g)};
}

inline void check_base(const Graph& g, const Orientation& o) {
  if (o.base_hash != graph_hash(g) || static_cast<int>(o.bits.size()) != g.edge_count())
    fail_input("orientation does not belong to this base graph");
}

inline int arc_tail(const Graph& g, const Orientation& o, int e) {
  return o.bits[e] ? g.edges[e].first : g.edges[e].second;
}

inline int arc_head(const Graph& g, const Orientation& o, int e) {
  return o.bits[e] ? g.edges[e].second : g.edges[e].first;
}

inline bool arc_from_to(const Graph& g, const Orientation& o, int u, int v) {
  int e = g.edge_between(u, v);
  if (e < 0) fail_input("no edge between '" + g.names[u] + "' and '" + g.names[v] + "'");
  return arc_tail(g, o, e) == u;
}

inline Orientation reversed(const Graph& g, const Orientation& o) {
  check_base(g, o);
  Orientation r = o;
  r.bits.flip();
  return r;
}

inline std::vector<int> directed_distances(const Graph& g, const Orientation& o, int src) {
  const int n = g.vertex_count();
  if (src < 0 || src >= n) fail_input("source out of range");
  std::vector<int> dist(n, kInfDist);
  std::vector<int> queue;
  queue.reserve(n);
  dist[src] = 0;
  queue.push_back(src);
  for (size_t h = 0; h < queue.size(); ++h) {
    int u = queue[h];
    for (auto [v, e] : g.adj[u]) {
      if (arc_tail(g, o, e) != u) continue;
      if (dist[v] == kInfDist) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

struct DistanceReport {
  int diameter = 0;
  std::pair<int, int> witness_pair{-1, -1};  // first maximizer in (src, dst) order
  bool strong = false;
};

inline DistanceReport digraph_diameter(const Graph& g, const Orientation& o) {
  check_base(g, o);
  const int n = g.vertex_count();
  if (n == 0) return {0, {-1, -1}, true};
  DistanceReport rep{-1, {-1, -1}, true};
  for (int src = 0; src < n; ++src) {
    auto dist = directed_distances(g, o, src);
    for (int v = 0; v < n; ++v) {
      if (dist[v] == kInfDist) return {kInfDist, {src, v}, false};
      if (dist[v] > rep.diameter) {
        rep.diameter = dist[v];
        rep.witness_pair = {src, v};
      }
    }
  }
  return rep;
}

inline bool is_strong(const Graph& g, const Orientation& o) {
  return digraph_diameter(g, o).strong;
}

// Length of the shortest directed cycle through v, or infinity.
inline int shortest_cycle_through(const Graph& g, const Orientation& o, int v) {
  check_base(g, o);
  const int n = g.vertex_count();
  if (v < 0 || v >= n) fail_input("vertex out of range");
  // BFS over reversed arcs from v gives d(z, v) for every z.
  std::vector<int> dist_to_v(n, kInfDist);
  std::vector<int> queue;
  queue.reserve(n);
  dist_to_v[v] = 0;
  queue.push_back(v);
  for (size_t h = 0; h < queue.size(); ++h) {
    int u = queue[h];
    for (auto [w, e] : g.adj[u]) {
      if (arc_head(g, o, e) != u) continue;
      if (dist_to_v[w] == kInfDist) {
        dist_to_v[w] = dist_to_v[u] + 1;
        queue.push_back(w);
      }
    }
  }
  int best = kInfDist;
  for (auto [w, e] : g.adj[v]) {
    if (arc_tail(g, o, e) != v) continue;
    best = std::min(best, dist_to_v[w]);
  }
  return best == kInfDist ? kInfDist : best + 1;
}

// Longest shortest cycle over all vertices; infinity unless strong.
inline int max_cycle_through_any(const Graph& g, const Orientation& o) {
  int worst = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int c = shortest_cycle_through(g, o, v);
    if (c == kInfDist) return kInfDist;
    worst = std::max(worst, c);
  }
  return worst;
}

// Clones of parent vertex q that x points at. q must be a parent neighbor of
// x's parent vertex.
inline std::vector<CloneVertex> out_set_toward(const MultiGraph& g, const Orientation& o,
                                               const CloneVertex& x, const std::string& q) {
  check_base(g, o);
  int xv = g.vertex_of(x);
  int qp = g.parent.vertex(q);
  if (g.parent.edge_between(g.parent_vertex[xv], qp) < 0)
    fail_pre("'" + q + "' is not adjacent to '" + x.parent + "' in the parent tree");
  std::vector<CloneVertex> out;
  for (int cv : g.clones_by_parent[qp])
    if (arc_from_to(g, o, xv, cv)) out.push_back(g.clone_of(cv));
  return out;
}

inline std::vector<CloneVertex> in_set_toward(const MultiGraph& g, const Orientation& o,
                                              const CloneVertex& x, const std::string& q) {
  check_base(g, o);
  int xv = g.vertex_of(x);
  int qp = g.parent.vertex(q);
  if (g.parent.edge_between(g.parent_vertex[xv], qp) < 0)
    fail_pre("'" + q + "' is not adjacent to '" + x.parent + "' in the parent tree");
  std::vector<CloneVertex> out;
  for (int cv : g.clones_by_parent[qp])
    if (arc_from_to(g, o, cv, xv)) out.push_back(g.clone_of(cv));
  return out;
}

struct SplitViolation {
  CloneVertex clone;
  std::string center;  // the center the empty set points toward
  bool missing_out = false;
};

// Necessary condition for diameter 5 when both center multiplicities are 2:
// every branch clone needs at least one arc to and one arc from the clones of
// its own center. Returns all violations in canonical order.
inline std::vector<SplitViolation> check_center_splits(const MultiGraph& g, const Orientation& o) {
  check_base(g, o);
  Diam5Profile p = profile_diam5(g.parent, g.s);
  if (g.s.at(p.c1) != 2 || g.s.at(p.c2) != 2)
    fail_pre("center-split check needs both center multiplicities equal to 2");
  std::vector<SplitViolation> out;
  for (int side = 0; side < 2; ++side) {
    const std::string& c = p.center(side);
    for (const auto& b : p.branches[side]) {
      for (int i = 1; i <= g.s.at(b); ++i) {
        CloneVertex x{b, i};
        if (out_set_toward(g, o, x, c).empty()) out.push_back({x, c, true});
        if (in_set_toward(g, o, x, c).empty()) out.push_back({x, c, false});
      }
    }
  }
  return out;
}

// --- serialization ---------------------------------------------------------
// The bitvector reads big-endian: edge 0 is the most significant bit. Hex
// strings pad with zero bits at the front to a whole number of digits, so for
// up to 63 edges the string equals the zero-padded hex of the numeric value.

inline std::string orientation_to_hex(const Graph& g, const Orientation& o) {
  check_base(g, o);
  const int m = g.edge_count();
  const int digits = (m + 3) / 4;
  const int pad = digits * 4 - m;
  static const char* hexdig = "0123456789abcdef";
  std::string out(digits, '0');
  int nibble = 0;
  for (int pos = 0; pos < digits * 4; ++pos) {
    nibble <<= 1;
    if (pos >= pad && o.bits[pos - pad]) nibble |= 1;
    if (pos % 4 == 3) {
      out[pos / 4] = hexdig[nibble];
      nibble = 0;
    }
  }
  return out;
}

inline Orientation orientation_from_hex(const Graph& g, const std::string& hex) {
  const int m = g.edge_count();
  const int digits = (m + 3) / 4;
  const int pad = digits * 4 - m;
  if (static_cast<int>(hex.size()) != digits)
    fail_input("orientation hex has " + std::to_string(hex.size()) + " digits, expected " +
               std::to_string(digits));
  std::vector<bool> bits(m, false);
  for (int d = 0; d < digits; ++d) {
    char c = hex[d];
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else fail_input(std::string("invalid hex digit '") + c + "'");
    for (int j = 0; j < 4; ++j) {
      int pos = d * 4 + j;
      bool bit = (v >> (3 - j)) & 1;
      if (pos < pad) {
        if (bit) fail_input("orientation hex has nonzero padding bits");
      } else {
        bits[pos - pad] = bit;
      }
    }
  }
  return make_orientation(g, std::move(bits));
}

inline uint64_t orientation_value(const Graph& g, const Orientation& o) {
  check_base(g, o);
  if (g.edge_count() > 63) fail_input("numeric orientation values need at most 63 edges");
  uint64_t v = 0;
  for (int e = 0; e < g.edge_count(); ++e) v = (v << 1) | (o.bits[e] ? 1u : 0u);
  return v;
}

inline Orientation orientation_from_value(const Graph& g, uint64_t value) {
  const int m = g.edge_count();
  if (m > 63) fail_input("numeric orientation values need at most 63 edges");
  if (m < 64 && (value >> m) != 0) fail_input("orientation value out of range");
  std::vector<bool> bits(m, false);
  for (int e = 0; e < m; ++e) bits[e] = (value >> (m - 1 - e)) & 1;
  return make_orientation(g, std::move(bits));
}

}  // namespace orient5

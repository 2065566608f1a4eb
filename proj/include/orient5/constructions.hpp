#pragma once

// Constructive diameter-5 orientations for class-C0 multiplications.
//
// Each scheme orients a fixed small multiplication H of the tree (the
// "template" instance for its decision row) so that the digraph has diameter
// 5, is strong, and puts every vertex on a directed cycle of length at most
// 4. lift() then copies the arc pattern onto any larger multiplication; the
// short cycles are exactly what keeps the copied pattern at diameter 5.
//
// The arc patterns are data, not code: one table per block of parallel
// edges, keyed by clone indices, so they can be audited entry by entry.
// Every scheme re-verifies its output by BFS and fails loudly on a defect.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "orient5/classifier.hpp"
#include "orient5/common.hpp"
#include "orient5/graph.hpp"
#include "orient5/multiplication.hpp"
#include "orient5/orientation.hpp"
#include "orient5/profile.hpp"

namespace orient5 {

namespace detail {

struct SchemeArc {
  int a;        // clone index within the first role
  int b;        // clone index within the second role
  bool a_to_b;  // true: arc runs first -> second
};

// Orients all edges between the clones of `first` and `second` according to
// the table. The table must cover each clone pair exactly once.
inline void apply_block(const MultiGraph& g, std::vector<bool>& bits, std::vector<bool>& done,
                        const std::string& first, const std::string& second,
                        const std::vector<SchemeArc>& table) {
  const int expect = g.s.at(first) * g.s.at(second);
  if (static_cast<int>(table.size()) != expect)
    fail_internal("arc table between '" + first + "' and '" + second + "' has " +
                  std::to_string(table.size()) + " entries, expected " + std::to_string(expect));
  for (const SchemeArc& arc : table) {
    int u = g.vertex_of({first, arc.a});
    int v = g.vertex_of({second, arc.b});
    int e = g.edge_between(u, v);
    if (e < 0) fail_internal("arc table touches a non-edge");
    if (done[e]) fail_internal("arc table orients an edge twice");
    done[e] = true;
    bits[e] = arc.a_to_b == (u < v);
  }
}

}  // namespace detail

struct SchemeResult {
  MultiGraph h;
  MultiplicityMap h_mult;
  Orientation orientation;
  int diameter = 0;
  int max_cycle = 0;
  bool role_swap = false;  // true when side 2 plays the distinguished role
};

namespace detail {

inline void verify_scheme(SchemeResult& r, const char* what) {
  DistanceReport rep = digraph_diameter(r.h, r.orientation);
  if (!rep.strong || rep.diameter != 5)
    fail_internal(std::string(what) + ": template orientation has diameter " +
                  dist_to_string(rep.diameter) + ", expected 5");
  int mc = max_cycle_through_any(r.h, r.orientation);
  if (mc > 4)
    fail_internal(std::string(what) + ": some vertex only lies on cycles longer than 4");
  r.diameter = rep.diameter;
  r.max_cycle = mc;
}

inline Orientation finish_bits(const MultiGraph& h, std::vector<bool> bits,
                               const std::vector<bool>& done) {
  for (int e = 0; e < h.edge_count(); ++e)
    if (!done[e]) fail_internal("arc tables left an edge unoriented");
  return make_orientation(h, std::move(bits));
}

}  // namespace detail

// Row 1 template: the distinguished center gets multiplicity 3, everything
// else 2. The third center clone is the hub that shortens return paths.
inline SchemeResult orient_triple_center(const ParentTree& t, const MultiplicityMap& s) {
  Diam5Profile p = profile_diam5(t, s);
  if (s.at(p.c1) < 3 && s.at(p.c2) < 3)
    fail_pre("triple-center scheme needs a center with multiplicity at least 3");
  SchemeResult r;
  r.role_swap = s.at(p.c1) < 3;  // prefer the first center when it qualifies
  const int side1 = r.role_swap ? 1 : 0;
  const std::string& v1 = p.center(side1);
  const std::string& v2 = p.center(1 - side1);

  r.h_mult = uniform_multiplicity(t, 2);
  r.h_mult[v1] = 3;
  r.h = multiply(t, r.h_mult);

  using detail::SchemeArc;
  // Center pair block, 3 x 2 clones.
  static const std::vector<SchemeArc> kCC{
      {1, 1, true},   // v1#1 -> v2#1
      {3, 1, true},   // v1#3 -> v2#1
      {2, 1, false},  // v2#1 -> v1#2
      {3, 2, true},   // v1#3 -> v2#2
      {1, 2, false},  // v2#2 -> v1#1
      {2, 2, false},  // v2#2 -> v1#2
  };
  // Distinguished center against one of its branches, 3 x 2.
  static const std::vector<SchemeArc> kCB1{
      {2, 1, true},   // v1#2 -> b#1
      {1, 1, false},  // b#1  -> v1#1
      {3, 1, false},  // b#1  -> v1#3
      {1, 2, true},   // v1#1 -> b#2
      {2, 2, true},   // v1#2 -> b#2
      {3, 2, false},  // b#2  -> v1#3
  };
  // Opposite center against one of its branches, 2 x 2.
  static const std::vector<SchemeArc> kCB2{
      {1, 1, true},   // v2#1 -> b#1
      {1, 2, false},  // b#2  -> v2#1
      {2, 1, false},  // b#1  -> v2#2
      {2, 2, true},   // v2#2 -> b#2
  };
  // Branch against one of its deep vertices, 2 x 2; b#2 feeds both deep
  // clones, both deep clones feed b#1. Shared by both sides.
  static const std::vector<SchemeArc> kBD{
      {2, 1, true},
      {2, 2, true},
      {1, 1, false},
      {1, 2, false},
  };

  std::vector<bool> bits(r.h.edge_count(), false), done(r.h.edge_count(), false);
  detail::apply_block(r.h, bits, done, v1, v2, kCC);
  for (const auto& b : p.branches[side1]) {
    detail::apply_block(r.h, bits, done, v1, b, kCB1);
    for (const auto& dp : p.deep[b]) detail::apply_block(r.h, bits, done, b, dp, kBD);
  }
  for (const auto& b : p.branches[1 - side1]) {
    detail::apply_block(r.h, bits, done, v2, b, kCB2);
    for (const auto& dp : p.deep[b]) detail::apply_block(r.h, bits, done, b, dp, kBD);
  }
  r.orientation = detail::finish_bits(r.h, std::move(bits), done);
  detail::verify_scheme(r, "triple-center scheme");
  return r;
}

// Row 3 (C0 case) template: every multiplicity 2; the side with exactly one
// non-leaf branch plays role 1. Its center clones act as a rotor: v1#1
// collects, v1#2 distributes, and the lone non-leaf branch closes 4-cycles
// with its deep vertices.
inline SchemeResult orient_lone_nonleaf(const ParentTree& t, const MultiplicityMap& s) {
  Diam5Profile p = profile_diam5(t, s);
  if (p.nl[0].size() != 1 && p.nl[1].size() != 1)
    fail_pre("lone-non-leaf scheme needs a side with exactly one non-leaf branch");
  SchemeResult r;
  r.role_swap = p.nl[0].size() != 1;
  const int side1 = r.role_swap ? 1 : 0;
  const std::string& v1 = p.center(side1);
  const std::string& v2 = p.center(1 - side1);

  r.h_mult = uniform_multiplicity(t, 2);
  r.h = multiply(t, r.h_mult);

  using detail::SchemeArc;
  static const std::vector<SchemeArc> kCC{
      {1, 1, true},   // v1#1 -> v2#1
      {1, 2, true},   // v1#1 -> v2#2
      {2, 1, false},  // v2#1 -> v1#2
      {2, 2, false},  // v2#2 -> v1#2
  };
  // Role-1 branches all point at v1#1 and are fed by v1#2.
  static const std::vector<SchemeArc> kCB1{
      {1, 1, false},
      {1, 2, false},
      {2, 1, true},
      {2, 2, true},
  };
  // Deep 4-cycle on the unique non-leaf role-1 branch:
  // d#1 -> b#1 -> d#2 -> b#2 -> d#1.
  static const std::vector<SchemeArc> kBD1{
      {1, 1, false},
      {1, 2, true},
      {2, 1, true},
      {2, 2, false},
  };
  // Role-2 side: b#1 -> v2#1 -> b#2 -> v2#2 -> b#1 per branch.
  static const std::vector<SchemeArc> kCB2{
      {1, 1, false},
      {1, 2, true},
      {2, 1, true},
      {2, 2, false},
  };
  static const std::vector<SchemeArc> kBD2{
      {2, 1, true},
      {2, 2, true},
      {1, 1, false},
      {1, 2, false},
  };

  std::vector<bool> bits(r.h.edge_count(), false), done(r.h.edge_count(), false);
  detail::apply_block(r.h, bits, done, v1, v2, kCC);
  for (const auto& b : p.branches[side1]) {
    detail::apply_block(r.h, bits, done, v1, b, kCB1);
    for (const auto& dp : p.deep[b]) detail::apply_block(r.h, bits, done, b, dp, kBD1);
  }
  for (const auto& b : p.branches[1 - side1]) {
    detail::apply_block(r.h, bits, done, v2, b, kCB2);
    for (const auto& dp : p.deep[b]) detail::apply_block(r.h, bits, done, b, dp, kBD2);
  }
  r.orientation = detail::finish_bits(r.h, std::move(bits), done);
  detail::verify_scheme(r, "lone-non-leaf scheme");
  return r;
}

// Row 2 template: non-leaf branches get multiplicity 4 (clones 1,2 move
// traffic up to the centers, clones 3,4 move it down to the deep vertices),
// everything else 2. Both sides use the same pattern.
inline SchemeResult orient_quad_branches(const ParentTree& t, const MultiplicityMap& s) {
  Diam5Profile p = profile_diam5(t, s);
  if (p.m[0] < 4 || p.m[1] < 4)
    fail_pre("quad-branch scheme needs every non-leaf branch multiplicity at least 4");
  SchemeResult r;
  r.role_swap = false;  // the pattern is symmetric in the two sides

  r.h_mult = uniform_multiplicity(t, 2);
  for (int side = 0; side < 2; ++side)
    for (const auto& b : p.nl[side]) r.h_mult[b] = 4;
  r.h = multiply(t, r.h_mult);

  using detail::SchemeArc;
  // Center 4-cycle: v1#1 -> v2#1 -> v1#2 -> v2#2 -> v1#1.
  static const std::vector<SchemeArc> kCC{
      {1, 1, true},
      {2, 1, false},
      {2, 2, true},
      {1, 2, false},
  };
  // Center against a non-leaf branch, 2 x 4:
  // c#2 -> {b#1, b#3} -> c#1 -> {b#2, b#4} -> c#2.
  static const std::vector<SchemeArc> kCBNonLeaf{
      {2, 1, true},
      {2, 3, true},
      {1, 1, false},
      {1, 3, false},
      {1, 2, true},
      {1, 4, true},
      {2, 2, false},
      {2, 4, false},
  };
  // Leaf branches keep multiplicity 2; same rotation restricted to b#1, b#2.
  static const std::vector<SchemeArc> kCBLeaf{
      {2, 1, true},
      {1, 1, false},
      {1, 2, true},
      {2, 2, false},
  };
  // Non-leaf branch against a deep vertex, 4 x 2:
  // {b#3, b#4} -> {d#1, d#2} -> {b#1, b#2}.
  static const std::vector<SchemeArc> kBD{
      {3, 1, true},
      {3, 2, true},
      {4, 1, true},
      {4, 2, true},
      {1, 1, false},
      {1, 2, false},
      {2, 1, false},
      {2, 2, false},
  };

  std::vector<bool> bits(r.h.edge_count(), false), done(r.h.edge_count(), false);
  detail::apply_block(r.h, bits, done, p.c1, p.c2, kCC);
  for (int side = 0; side < 2; ++side) {
    for (const auto& b : p.branches[side]) {
      bool nonleaf = !p.deep.at(b).empty();
      detail::apply_block(r.h, bits, done, p.center(side), b, nonleaf ? kCBNonLeaf : kCBLeaf);
      for (const auto& dp : p.deep.at(b)) detail::apply_block(r.h, bits, done, b, dp, kBD);
    }
  }
  r.orientation = detail::finish_bits(r.h, std::move(bits), done);
  detail::verify_scheme(r, "quad-branch scheme");

  // This scheme additionally promises two-step access between each side's
  // center clones and its deep clones, in both directions.
  for (int side = 0; side < 2; ++side) {
    for (int q = 1; q <= 2; ++q) {
      int cv = r.h.vertex_of({p.center(side), q});
      auto from_center = directed_distances(r.h, r.orientation, cv);
      for (const auto& b : p.nl[side]) {
        for (const auto& dp : p.deep.at(b)) {
          for (int i = 1; i <= 2; ++i) {
            int dv = r.h.vertex_of({dp, i});
            auto from_deep = directed_distances(r.h, r.orientation, dv);
            if (from_center[dv] != 2 || from_deep[cv] != 2)
              fail_internal("quad-branch scheme: center/deep two-step property failed");
          }
        }
      }
    }
  }
  return r;
}

// Extends an orientation of multiply(parent, mu) to multiply(parent, lambda)
// for lambda >= mu: clone x of v copies the arc pattern of the clone
// ((x - 1) mod mu(v)) + 1. New clones then sit on the same short cycles as
// their representatives, so the diameter stays within
// max(longest forced cycle, source diameter). Verified here by BFS.
struct LiftResult {
  MultiGraph target;
  Orientation orientation;
  std::map<std::string, std::vector<int>> representatives;
  int source_diameter = 0;
  int source_max_cycle = 0;
  int diameter = 0;
};

inline LiftResult lift(const MultiGraph& base, const Orientation& f,
                       const MultiplicityMap& lambda) {
  check_base(base, f);
  validate_multiplicities(base.parent, lambda, 1);
  for (const auto& [name, mu] : base.s)
    if (lambda.at(name) < mu)
      fail_pre("lift multiplicity for '" + name + "' is " + std::to_string(lambda.at(name)) +
               ", below the source value " + std::to_string(mu));
  DistanceReport src = digraph_diameter(base, f);
  if (!src.strong) fail_pre("lift needs a strong source orientation");

  LiftResult out;
  out.source_diameter = src.diameter;
  out.source_max_cycle = max_cycle_through_any(base, f);
  out.target = multiply(base.parent, lambda);
  for (const auto& [name, count] : lambda) {
    int mu = base.s.at(name);
    std::vector<int>& reps = out.representatives[name];
    for (int x = 1; x <= count; ++x) reps.push_back((x - 1) % mu + 1);
  }

  std::vector<bool> bits(out.target.edge_count(), false);
  for (int e = 0; e < out.target.edge_count(); ++e) {
    auto [lo, hi] = out.target.edges[e];
    int pa = out.target.parent_vertex[lo], pb = out.target.parent_vertex[hi];
    int ra = out.representatives.at(base.parent.names[pa])[out.target.clone_index[lo] - 1];
    int rb = out.representatives.at(base.parent.names[pb])[out.target.clone_index[hi] - 1];
    int bu = base.clones_by_parent[pa][ra - 1];
    int bv = base.clones_by_parent[pb][rb - 1];
    bits[e] = arc_from_to(base, f, bu, bv);
  }
  out.orientation = make_orientation(out.target, std::move(bits));

  const int bound = std::max(out.source_max_cycle, out.source_diameter);
  DistanceReport rep = digraph_diameter(out.target, out.orientation);
  if (!rep.strong || rep.diameter > bound) {
    auto wp = rep.witness_pair;
    fail_internal("lift verification failed: diameter " + dist_to_string(rep.diameter) +
                  " exceeds the bound " + std::to_string(bound) + " (witness pair " +
                  out.target.names[wp.first] + " -> " + out.target.names[wp.second] + ")");
  }
  out.diameter = rep.diameter;
  return out;
}

// End-to-end C0 certificate: classify, orient the row's template instance,
// lift to the requested multiplicities, and re-verify the final diameter.
struct Certificate {
  Classification classification;
  SchemeResult scheme;
  LiftResult lifted;
  DistanceReport verified;
};

inline Certificate certify_c0(const ParentTree& t, const MultiplicityMap& s) {
  Certificate cert;
  cert.classification = classify(t, s);
  if (cert.classification.klass == Klass::C1)
    fail_pre("class is C1: no orientation reaches diameter 5 (6 is optimal)");
  switch (cert.classification.rule) {
    case Rule::Row1: cert.scheme = orient_triple_center(t, s); break;
    case Rule::Row2: cert.scheme = orient_quad_branches(t, s); break;
    default: cert.scheme = orient_lone_nonleaf(t, s); break;
  }
  cert.lifted = lift(cert.scheme.h, cert.scheme.orientation, s);
  cert.verified = digraph_diameter(cert.lifted.target, cert.lifted.orientation);
  if (!cert.verified.strong || cert.verified.diameter != 5)
    fail_internal("certificate verification failed: final diameter is " +
                  dist_to_string(cert.verified.diameter) + ", expected 5");
  return cert;
}

// Randomized search for a diameter-6 witness on a C1 instance: greedy arc
// flips that shrink the number of vertex pairs farther apart than 6, with
// random restarts. Restart r seeds its generator with seed + r, so results
// are reproducible. Finding nothing within the budget is a legitimate
// outcome, reported through an empty witness.
struct WitnessSearch {
  MultiGraph graph;
  std::optional<Orientation> witness;
  int diameter = 0;
  uint64_t evaluations = 0;
  int restarts = 0;
};

inline WitnessSearch search_c1_witness(const ParentTree& t, const MultiplicityMap& s,
                                       uint64_t budget, uint64_t seed) {
  Classification c = classify(t, s);
  if (c.klass != Klass::C1)
    fail_pre("class is C0: certify_c0 produces a diameter-5 orientation directly");
  WitnessSearch out;
  out.graph = multiply(t, s);
  const Graph& g = out.graph;
  const int target = 6;

  auto bad_pairs = [&](const Orientation& o) {
    long bad = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      auto dist = directed_distances(g, o, v);
      for (int w = 0; w < g.vertex_count(); ++w)
        if (dist[w] == kInfDist || dist[w] > target) ++bad;
    }
    return bad;
  };

  while (out.evaluations < budget) {
    std::mt19937_64 rng(seed + static_cast<uint64_t>(out.restarts));
    ++out.restarts;
    std::vector<bool> bits(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) bits[e] = rng() & 1;
    Orientation o = make_orientation(g, std::move(bits));
    long cur = bad_pairs(o);
    ++out.evaluations;
    bool improved = true;
    while (cur > 0 && improved && out.evaluations < budget) {
      improved = false;
      std::vector<int> order(g.edge_count());
      for (int e = 0; e < g.edge_count(); ++e) order[e] = e;
      std::shuffle(order.begin(), order.end(), rng);
      for (int e : order) {
        if (out.evaluations >= budget) break;
        o.bits[e] = !o.bits[e];
        long cand = bad_pairs(o);
        ++out.evaluations;
        if (cand < cur) {
          cur = cand;
          improved = true;
        } else {
          o.bits[e] = !o.bits[e];
        }
      }
    }
    if (cur == 0) {
      DistanceReport rep = digraph_diameter(g, o);
      if (!rep.strong || rep.diameter > target)
        fail_internal("witness search scoring is inconsistent with BFS");
      if (rep.diameter < target)
        fail_internal("witness search found diameter " + std::to_string(rep.diameter) +
                      " on an input classified C1");
      out.witness = o;
      out.diameter = rep.diameter;
      return out;
    }
  }
  return out;
}

}  // namespace orient5

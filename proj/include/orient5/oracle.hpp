#pragma once

// Exhaustive orientation search. Orientations are packed into uint64 values
// (edge 0 is the most significant bit, bit 1 points low id -> high id), and
// the search enumerates them in increasing numeric order by assigning edges
// in blocks: block i holds the edges whose lower endpoint is vertex i, so
// once block i is done every edge at vertex i is fixed and degree filters
// can prune the whole subtree.
//
// Filters:
//   none     every assignment is evaluated
//   strong   every vertex needs an in-arc and an out-arc
//   lemma22  strong, plus: in a multiplication of a diameter-5 tree whose
//            center multiplicities are both 2, every branch clone needs an
//            arc to and from its own side's center clones. This is a
//            necessary condition for reaching diameter 5, so it is only
//            offered for the target-5 decision question.
//
// Results are deterministic and independent of the thread count: minimum
// searches merge per-thread bests by (diameter, value), existence searches
// return the numerically smallest witness and re-derive the explored count
// sequentially. `explored` always means the number of complete assignments
// a single-threaded run would have evaluated.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "orient5/common.hpp"
#include "orient5/graph.hpp"
#include "orient5/multiplication.hpp"
#include "orient5/orientation.hpp"
#include "orient5/profile.hpp"

namespace orient5 {

enum class Filter { None, Strong, CenterSplits };

inline std::string to_string(Filter f) {
  switch (f) {
    case Filter::None: return "none";
    case Filter::Strong: return "strong";
    default: return "lemma22";
  }
}

inline Filter filter_from_string(const std::string& s) {
  if (s == "none") return Filter::None;
  if (s == "strong") return Filter::Strong;
  if (s == "lemma22") return Filter::CenterSplits;
  fail_input("unknown filter '" + s + "' (expected none, strong, or lemma22)");
}

struct SearchConfig {
  Filter filter = Filter::Strong;
  int threads = 0;        // 0: ORIENT5_THREADS, or 1 when unset
  int max_edges = 0;      // 0: 24 unfiltered, 48 filtered
  std::string checkpoint_path;        // empty: no checkpointing
  uint64_t checkpoint_every = 65536;  // evaluations between checkpoint writes
};

struct OracleResult {
  int d_bar = kInfDist;             // min diameter over strong orientations
  std::optional<uint64_t> witness;  // numerically smallest minimizer
  uint64_t explored = 0;            // filter-passing assignments evaluated
};

struct ExistsResult {
  bool found = false;
  std::optional<uint64_t> witness;  // smallest value with diameter <= target
  int diameter = 0;                 // exact diameter of the witness
  uint64_t explored = 0;
};

inline int resolve_threads(const SearchConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  if (const char* env = std::getenv("ORIENT5_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 4096)
      fail_input("ORIENT5_THREADS must be a positive integer, got '" + std::string(env) + "'");
    return static_cast<int>(v);
  }
  return 1;
}

namespace detail {

constexpr int kHardMaxEdges = 62;

inline void guard_edges(const Graph& g, const SearchConfig& cfg) {
  int cap = cfg.max_edges > 0 ? cfg.max_edges : (cfg.filter == Filter::None ? 24 : 48);
  cap = std::min(cap, kHardMaxEdges);
  if (g.edge_count() > cap)
    fail_pre("search over 2^" + std::to_string(g.edge_count()) +
             " orientations exceeds the edge cap " + std::to_string(cap) +
             (cfg.max_edges > 0 ? "" : " (raise max_edges to override)"));
}

// Orientation-aware adjacency in CSR form. Arc k out of v is usable under
// value V exactly when bit (value >> shift[k]) & 1 equals out_when[k].
struct SweepGraph {
  int n = 0;
  std::vector<int> row, nbr, shift;
  std::vector<uint64_t> out_when;

  explicit SweepGraph(const Graph& g) : n(g.vertex_count()) {
    const int m = g.edge_count();
    row.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) row[v + 1] = row[v] + static_cast<int>(g.adj[v].size());
    nbr.resize(row[n]);
    shift.resize(row[n]);
    out_when.resize(row[n]);
    for (int v = 0; v < n; ++v) {
      int k = row[v];
      for (auto [w, e] : g.adj[v]) {
        nbr[k] = w;
        shift[k] = m - 1 - e;
        out_when[k] = g.edges[e].first == v ? 1 : 0;
        ++k;
      }
    }
  }
};

// Exact diameter when the digraph is strong and the diameter is at most
// threshold; -1 otherwise.
inline int eval_diameter(const SweepGraph& sg, uint64_t value, int threshold,
                         std::vector<int>& dist, std::vector<int>& queue) {
  int diam = 0;
  for (int src = 0; src < sg.n; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    queue[0] = src;
    int head = 0, tail = 1;
    while (head < tail) {
      int v = queue[head++];
      int dv = dist[v];
      for (int k = sg.row[v]; k < sg.row[v + 1]; ++k) {
        if (((value >> sg.shift[k]) & 1u) != sg.out_when[k]) continue;
        int w = sg.nbr[k];
        if (dist[w] >= 0) continue;
        if (dv + 1 > threshold) return -1;
        dist[w] = dv + 1;
        queue[tail++] = w;
      }
    }
    if (tail < sg.n) return -1;
    diam = std::max(diam, dist[queue[tail - 1]]);
  }
  return diam;
}

// One pruning rule: among the listed bits of the value, at least one must
// equal its `want` entry (an out-arc) and at least one must differ (an
// in-arc). An empty list fails, which correctly kills isolated vertices.
struct DegreeCheck {
  std::vector<int> shifts;
  std::vector<uint64_t> want;

  bool ok(uint64_t value) const {
    bool has_out = false, has_in = false;
    for (size_t i = 0; i < shifts.size(); ++i) {
      if (((value >> shifts[i]) & 1u) == want[i]) has_out = true;
      else has_in = true;
      if (has_out && has_in) return true;
    }
    return false;
  }
};

struct EnumPlan {
  int m = 0;
  std::vector<std::pair<int, int>> blocks;        // per vertex: [first, last) edge ids
  std::vector<std::vector<DegreeCheck>> checks;   // evaluated after that block
};

inline int owner_block(const Graph& g, int edge) { return g.edges[edge].first; }

inline void add_vertex_check(const Graph& g, EnumPlan& plan, int v,
                             const std::vector<int>& edge_ids) {
  DegreeCheck ch;
  int after = 0;
  for (int e : edge_ids) {
    ch.shifts.push_back(plan.m - 1 - e);
    ch.want.push_back(g.edges[e].first == v ? 1 : 0);
    after = std::max(after, owner_block(g, e));
  }
  plan.checks[after].push_back(std::move(ch));
}

inline EnumPlan make_plan(const Graph& g, Filter filter) {
  EnumPlan plan;
  plan.m = g.edge_count();
  const int n = g.vertex_count();
  plan.blocks.assign(n, {0, 0});
  int e = 0;
  for (int v = 0; v < n; ++v) {
    plan.blocks[v].first = e;
    while (e < plan.m && g.edges[e].first == v) ++e;
    plan.blocks[v].second = e;
  }
  plan.checks.assign(n, {});
  if (filter != Filter::None) {
    for (int v = 0; v < n; ++v) {
      std::vector<int> ids;
      for (auto [w, eid] : g.adj[v]) ids.push_back(eid);
      add_vertex_check(g, plan, v, ids);
    }
  }
  return plan;
}

// Strong plan plus the center-split rule for every branch clone.
inline EnumPlan make_center_splits_plan(const MultiGraph& g) {
  Diam5Profile p = profile_diam5(g.parent, g.s);
  if (g.s.at(p.c1) != 2 || g.s.at(p.c2) != 2)
    fail_pre("the lemma22 filter needs both center multiplicities equal to 2");
  EnumPlan plan = make_plan(g, Filter::Strong);
  for (int side = 0; side < 2; ++side) {
    int center = g.parent.vertex(p.center(side));
    for (const auto& bname : p.branches[side]) {
      int branch = g.parent.vertex(bname);
      for (int bv : g.clones_by_parent[branch]) {
        std::vector<int> ids;
        for (int cv : g.clones_by_parent[center]) {
          int e = g.edge_between(bv, cv);
          if (e < 0) fail_internal("branch clone not adjacent to its center clone");
          ids.push_back(e);
        }
        add_vertex_check(g, plan, bv, ids);
      }
    }
  }
  return plan;
}

// DFS over filter-passing assignments in increasing value order, from block
// bi to end_block. Subtrees whose value range ends at or below skip_below
// are skipped (checkpoint resume); subtrees starting at or above *stop_at
// are skipped (smallest-witness protocol). leaf returns false to abort.
template <class F>
inline bool walk(const EnumPlan& plan, size_t bi, size_t end_block, uint64_t value,
                 uint64_t skip_below, const std::atomic<uint64_t>* stop_at, F&& leaf) {
  if (bi == end_block) {
    if (value < skip_below) return true;
    if (stop_at && value >= stop_at->load(std::memory_order_relaxed)) return true;
    return leaf(value);
  }
  const auto [e0, e1] = plan.blocks[bi];
  const int width = e1 - e0;
  const uint64_t sub = uint64_t{1} << (plan.m - e1);
  for (uint64_t c = 0; c < (uint64_t{1} << width); ++c) {
    const uint64_t v = value | (c << (plan.m - e1));
    if (v + sub <= skip_below) continue;
    if (stop_at && v >= stop_at->load(std::memory_order_relaxed)) return true;
    bool pruned = false;
    for (const DegreeCheck& ch : plan.checks[bi]) {
      if (!ch.ok(v)) {
        pruned = true;
        break;
      }
    }
    if (pruned) continue;
    if (!walk(plan, bi + 1, end_block, v, skip_below, stop_at, leaf)) return false;
  }
  return true;
}

// Splits the space into work items: prefixes over the leading blocks, spread
// round-robin so every thread sees its share in increasing order.
struct WorkSplit {
  size_t cut = 0;
  std::vector<uint64_t> items;
};

inline WorkSplit split_work(const EnumPlan& plan, int threads) {
  WorkSplit ws;
  uint64_t combos = 1;
  int bits = 0;
  while (ws.cut < plan.blocks.size() && combos < uint64_t(threads) * 16 && bits <= 20) {
    int w = plan.blocks[ws.cut].second - plan.blocks[ws.cut].first;
    bits += w;
    combos <<= w;
    ++ws.cut;
  }
  walk(plan, 0, ws.cut, 0, 0, nullptr, [&](uint64_t v) {
    ws.items.push_back(v);
    return true;
  });
  return ws;
}

}  // namespace detail

// Resumable-search state. The invariant: every filter-passing value below
// done_below has been evaluated, and explored counts exactly those values.
struct Checkpoint {
  uint64_t graph = 0;  // graph_hash of the searched graph
  std::string mode;    // "min" or "exists"
  Filter filter = Filter::Strong;
  int target = -1;     // exists mode only
  uint64_t done_below = 0;
  uint64_t explored = 0;
  std::optional<std::pair<int, uint64_t>> best;  // (diameter, value), min mode
};

inline void checkpoint_save(const std::string& path, const Checkpoint& cp) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) fail_input("cannot write checkpoint file '" + tmp + "'");
    out << "format orient5-oracle-checkpoint/v1\n";
    out << "graph " << hex_u64(cp.graph) << "\n";
    out << "mode " << cp.mode << "\n";
    out << "filter " << to_string(cp.filter) << "\n";
    out << "target " << cp.target << "\n";
    out << "done_below " << cp.done_below << "\n";
    out << "explored " << cp.explored << "\n";
    if (cp.best) out << "best " << cp.best->first << " " << cp.best->second << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    fail_input("cannot move checkpoint into place at '" + path + "'");
}

inline std::optional<Checkpoint> checkpoint_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Checkpoint cp;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string key;
    if (!(row >> key)) continue;
    if (key == "format") {
      std::string fmt;
      row >> fmt;
      if (fmt != "orient5-oracle-checkpoint/v1")
        fail_input("unsupported checkpoint format in '" + path + "'");
      header = true;
    } else if (key == "graph") {
      std::string hx;
      row >> hx;
      cp.graph = std::stoull(hx, nullptr, 16);
    } else if (key == "mode") {
      row >> cp.mode;
    } else if (key == "filter") {
      std::string f;
      row >> f;
      cp.filter = filter_from_string(f);
    } else if (key == "target") {
      row >> cp.target;
    } else if (key == "done_below") {
      row >> cp.done_below;
    } else if (key == "explored") {
      row >> cp.explored;
    } else if (key == "best") {
      int d = 0;
      uint64_t v = 0;
      row >> d >> v;
      cp.best = {d, v};
    } else {
      fail_input("unknown checkpoint key '" + key + "' in '" + path + "'");
    }
  }
  if (!header) fail_input("'" + path + "' is not a checkpoint file");
  return cp;
}

namespace detail {

inline void match_checkpoint(const Checkpoint& cp, uint64_t graph, const std::string& mode,
                             Filter filter, int target) {
  if (cp.graph != graph || cp.mode != mode || cp.filter != filter || cp.target != target)
    fail_input("checkpoint does not match this search (graph/mode/filter/target differ)");
}

}  // namespace detail

// Minimum diameter over all strong orientations, with the numerically
// smallest witness. d_bar stays infinite when no strong orientation exists
// (the graph has a bridge or is disconnected).
inline OracleResult orientation_number(const Graph& g, const SearchConfig& cfg = {}) {
  if (cfg.filter == Filter::CenterSplits)
    fail_pre("the lemma22 filter is decision-only; use exists_diameter_at_most with target 5");
  detail::guard_edges(g, cfg);
  const detail::EnumPlan plan = detail::make_plan(g, cfg.filter);
  const detail::SweepGraph sg(g);
  const int n = g.vertex_count();
  const int threads = resolve_threads(cfg);

  OracleResult out;
  int best_d = n;  // a strong digraph on n vertices has diameter < n
  std::optional<uint64_t> best_v;

  if (threads == 1) {
    uint64_t skip_below = 0;
    uint64_t since_save = 0;
    const bool use_cp = !cfg.checkpoint_path.empty();
    if (use_cp) {
      if (auto cp = checkpoint_load(cfg.checkpoint_path)) {
        detail::match_checkpoint(*cp, graph_hash(g), "min", cfg.filter, -1);
        skip_below = cp->done_below;
        out.explored = cp->explored;
        if (cp->best) {
          best_d = cp->best->first;
          best_v = cp->best->second;
        }
      }
    }
    std::vector<int> dist(n), queue(n);
    detail::walk(plan, 0, plan.blocks.size(), 0, skip_below, nullptr, [&](uint64_t v) {
      int d = detail::eval_diameter(sg, v, best_d, dist, queue);
      ++out.explored;
      if (d >= 0 && (d < best_d || !best_v)) {
        best_d = d;
        best_v = v;
      }
      if (use_cp && ++since_save >= cfg.checkpoint_every) {
        since_save = 0;
        Checkpoint cp;
        cp.graph = graph_hash(g);
        cp.mode = "min";
        cp.filter = cfg.filter;
        cp.done_below = v + 1;
        cp.explored = out.explored;
        if (best_v) cp.best = {best_d, *best_v};
        checkpoint_save(cfg.checkpoint_path, cp);
      }
      return true;
    });
    if (use_cp) std::remove(cfg.checkpoint_path.c_str());
  } else {
    if (!cfg.checkpoint_path.empty())
      fail_pre("checkpointing requires a single-threaded search");
    detail::WorkSplit ws = detail::split_work(plan, threads);
    std::atomic<int> shared_best{n};
    struct Local {
      int d = 0;
      std::optional<uint64_t> v;
      uint64_t explored = 0;
    };
    std::vector<Local> locals(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      locals[t].d = n;
      pool.emplace_back([&, t] {
        Local& loc = locals[t];
        std::vector<int> dist(n), queue(n);
        for (size_t i = t; i < ws.items.size(); i += threads) {
          detail::walk(plan, ws.cut, plan.blocks.size(), ws.items[i], 0, nullptr,
                       [&](uint64_t v) {
                         int d = detail::eval_diameter(
                             sg, v, shared_best.load(std::memory_order_relaxed), dist, queue);
                         ++loc.explored;
                         if (d >= 0) {
                           if (d < loc.d || !loc.v) {
                             loc.d = d;
                             loc.v = v;
                           }
                           int cur = shared_best.load(std::memory_order_relaxed);
                           while (d < cur &&
                                  !shared_best.compare_exchange_weak(cur, d,
                                                                     std::memory_order_relaxed)) {
                           }
                         }
                         return true;
                       });
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const Local& loc : locals) {
      out.explored += loc.explored;
      if (!loc.v) continue;
      if (!best_v || loc.d < best_d || (loc.d == best_d && *loc.v < *best_v)) {
        best_d = loc.d;
        best_v = *loc.v;
      }
    }
  }

  if (best_v) {
    out.d_bar = best_d;
    out.witness = best_v;
    // Arc reversal preserves both strongness and diameter; re-checking the
    // witness both ways guards the sweep against a broken evaluator.
    Orientation o = orientation_from_value(g, *best_v);
    DistanceReport fwd = digraph_diameter(g, o);
    DistanceReport bwd = digraph_diameter(g, reversed(g, o));
    if (!fwd.strong || !bwd.strong || fwd.diameter != best_d || bwd.diameter != best_d)
      fail_internal("oracle witness failed the reversal cross-check");
  }
  return out;
}

namespace detail {

inline ExistsResult exists_impl(const Graph& g, int target, const SearchConfig& cfg,
                                const EnumPlan& plan) {
  guard_edges(g, cfg);
  ExistsResult out;
  if (target < 0) return out;
  // No orientation beats the undirected distances, so a large undirected
  // diameter settles the question without any enumeration.
  if (!is_connected(g) || diameter(g) > target) return out;

  const SweepGraph sg(g);
  const int n = g.vertex_count();
  const int threads = resolve_threads(cfg);

  if (threads == 1) {
    uint64_t skip_below = 0;
    uint64_t since_save = 0;
    const bool use_cp = !cfg.checkpoint_path.empty();
    if (use_cp) {
      if (auto cp = checkpoint_load(cfg.checkpoint_path)) {
        match_checkpoint(*cp, graph_hash(g), "exists", cfg.filter, target);
        skip_below = cp->done_below;
        out.explored = cp->explored;
      }
    }
    std::vector<int> dist(n), queue(n);
    walk(plan, 0, plan.blocks.size(), 0, skip_below, nullptr, [&](uint64_t v) {
      int d = eval_diameter(sg, v, target, dist, queue);
      ++out.explored;
      if (d >= 0) {
        out.found = true;
        out.witness = v;
        out.diameter = d;
        return false;
      }
      if (use_cp && ++since_save >= cfg.checkpoint_every) {
        since_save = 0;
        Checkpoint cp;
        cp.graph = graph_hash(g);
        cp.mode = "exists";
        cp.filter = cfg.filter;
        cp.target = target;
        cp.done_below = v + 1;
        cp.explored = out.explored;
        checkpoint_save(cfg.checkpoint_path, cp);
      }
      return true;
    });
    if (use_cp) std::remove(cfg.checkpoint_path.c_str());
    return out;
  }

  if (!cfg.checkpoint_path.empty())
    fail_pre("checkpointing requires a single-threaded search");
  WorkSplit ws = split_work(plan, threads);
  std::atomic<uint64_t> best{~uint64_t{0}};
  std::vector<uint64_t> evals(threads, 0);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      std::vector<int> dist(n), queue(n);
      for (size_t i = t; i < ws.items.size(); i += threads) {
        if (ws.items[i] >= best.load(std::memory_order_relaxed)) continue;
        walk(plan, ws.cut, plan.blocks.size(), ws.items[i], 0, &best, [&](uint64_t v) {
          int d = eval_diameter(sg, v, target, dist, queue);
          ++evals[t];
          if (d >= 0) {
            uint64_t cur = best.load(std::memory_order_relaxed);
            while (v < cur &&
                   !best.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
            }
            return false;
          }
          return true;
        });
      }
    });
  }
  for (auto& th : pool) th.join();

  const uint64_t w = best.load();
  if (w == ~uint64_t{0}) {
    // Exhausted: every filter-passing value was evaluated exactly once.
    for (uint64_t c : evals) out.explored += c;
    return out;
  }
  out.found = true;
  out.witness = w;
  std::vector<int> dist(n), queue(n);
  out.diameter = eval_diameter(sg, w, target, dist, queue);
  if (out.diameter < 0) fail_internal("parallel existence witness failed re-evaluation");
  // Report what a sequential run would have evaluated: every filter-passing
  // value up to and including the witness.
  out.explored = 0;
  walk(plan, 0, plan.blocks.size(), 0, 0, nullptr, [&](uint64_t v) {
    if (v > w) return false;
    ++out.explored;
    return true;
  });
  return out;
}

}  // namespace detail

inline ExistsResult exists_diameter_at_most(const Graph& g, int target,
                                            const SearchConfig& cfg = {}) {
  if (cfg.filter == Filter::CenterSplits)
    fail_pre("the lemma22 filter needs a vertex-multiplication; pass a MultiGraph");
  return detail::exists_impl(g, target, cfg, detail::make_plan(g, cfg.filter));
}

inline ExistsResult exists_diameter_at_most(const MultiGraph& g, int target,
                                            const SearchConfig& cfg = {}) {
  if (cfg.filter != Filter::CenterSplits)
    return exists_diameter_at_most(static_cast<const Graph&>(g), target, cfg);
  if (target != 5)
    fail_pre("the lemma22 filter only decides diameter 5, got target " + std::to_string(target));
  return detail::exists_impl(g, target, cfg, detail::make_center_splits_plan(g));
}

// All filter-passing values in increasing order, without evaluating any
// diameters. Single-threaded.
inline std::vector<uint64_t> enumerate_filtered(const Graph& g, const SearchConfig& cfg = {}) {
  if (cfg.filter == Filter::CenterSplits)
    fail_pre("the lemma22 filter is decision-only; enumerate with strong instead");
  detail::guard_edges(g, cfg);
  const detail::EnumPlan plan = detail::make_plan(g, cfg.filter);
  std::vector<uint64_t> values;
  detail::walk(plan, 0, plan.blocks.size(), 0, 0, nullptr, [&](uint64_t v) {
    values.push_back(v);
    return true;
  });
  return values;
}

// All filter-passing values whose orientation is strong with diameter at
// most target, in increasing order. Single-threaded.
inline std::vector<uint64_t> collect_diameter_at_most(const Graph& g, int target,
                                                      const SearchConfig& cfg = {}) {
  if (cfg.filter == Filter::CenterSplits)
    fail_pre("the lemma22 filter is decision-only; collect with strong instead");
  detail::guard_edges(g, cfg);
  const detail::EnumPlan plan = detail::make_plan(g, cfg.filter);
  const detail::SweepGraph sg(g);
  std::vector<uint64_t> values;
  if (!is_connected(g) || diameter(g) > target) return values;
  std::vector<int> dist(g.vertex_count()), queue(g.vertex_count());
  detail::walk(plan, 0, plan.blocks.size(), 0, 0, nullptr, [&](uint64_t v) {
    if (detail::eval_diameter(sg, v, target, dist, queue) >= 0) values.push_back(v);
    return true;
  });
  return values;
}

}  // namespace orient5

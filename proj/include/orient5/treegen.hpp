#pragma once

// Deterministic tree generators for the CLI and the test rigs.

#include <random>
#include <string>
#include <vector>

#include "orient5/common.hpp"
#include "orient5/graph.hpp"

namespace orient5 {

namespace detail {

// p1..pn, zero-padded so lexicographic order equals numeric order.
inline std::string numbered_name(const std::string& prefix, int i, int max) {
  std::string num = std::to_string(i);
  std::string width = std::to_string(max);
  return prefix + std::string(width.size() - num.size(), '0') + num;
}

}  // namespace detail

inline ParentTree gen_path(int n) {
  if (n < 2) fail_input("path needs at least 2 vertices");
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i < n; ++i)
    edges.push_back({detail::numbered_name("p", i, n), detail::numbered_name("p", i + 1, n)});
  return tree_from_edges(edges);
}

// Two adjacent centers u (side 1) and w (side 2); side 1 carries `a` branches
// with `b` deep leaves each, side 2 carries `c` branches with `d` deep leaves
// each. b, d >= 1 keeps the diameter at exactly 5.
inline ParentTree gen_double_spider(int a, int b, int c, int d) {
  if (a < 1 || c < 1) fail_input("double spider needs at least one branch per side");
  if (b < 1 || d < 1) fail_input("double spider branches need at least one deep leaf");
  std::vector<std::pair<std::string, std::string>> edges;
  edges.push_back({"u", "w"});
  for (int i = 1; i <= a; ++i) {
    std::string br = detail::numbered_name("a", i, a);
    edges.push_back({"u", br});
    for (int j = 1; j <= b; ++j) edges.push_back({br, br + "x" + detail::numbered_name("", j, b)});
  }
  for (int i = 1; i <= c; ++i) {
    std::string br = detail::numbered_name("b", i, c);
    edges.push_back({"w", br});
    for (int j = 1; j <= d; ++j) edges.push_back({br, br + "x" + detail::numbered_name("", j, d)});
  }
  return tree_from_edges(edges);
}

inline ParentTree tree_from_prufer(const std::vector<int>& code,
                                   const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  if (n < 2 || static_cast<int>(code.size()) != n - 2) fail_input("bad prufer code length");
  std::vector<int> degree(n, 1);
  for (int v : code) {
    if (v < 0 || v >= n) fail_input("prufer code value out of range");
    ++degree[v];
  }
  std::vector<std::pair<std::string, std::string>> edges;
  // Standard decode: repeatedly join the smallest leaf to the next code entry.
  std::vector<bool> used(n, false);
  for (int v : code) {
    int leaf = -1;
    for (int u = 0; u < n; ++u)
      if (degree[u] == 1 && !used[u]) {
        leaf = u;
        break;
      }
    edges.push_back({names[leaf], names[v]});
    used[leaf] = true;
    --degree[v];
  }
  int u1 = -1, u2 = -1;
  for (int u = 0; u < n; ++u)
    if (!used[u] && degree[u] == 1) (u1 < 0 ? u1 : u2) = u;
  edges.push_back({names[u1], names[u2]});
  return tree_from_edges(edges);
}

// Rejection-samples uniform labeled trees until the diameter is exactly 5.
inline ParentTree gen_random_d5(int n, uint64_t seed) {
  if (n < 6) fail_input("diameter-5 trees need at least 6 vertices");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(detail::numbered_name("t", i, n));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int attempt = 0; attempt < 200000; ++attempt) {
    std::vector<int> code(n - 2);
    for (int& v : code) v = pick(rng);
    ParentTree t = tree_from_prufer(code, names);
    if (diameter(t) == 5) return t;
  }
  fail_internal("random tree sampling failed to hit diameter 5");
}

}  // namespace orient5

#pragma once

// Decision table for vertex-multiplications of diameter-5 trees. With every
// multiplicity at least 2 the minimum orientation diameter is either 5
// (class C0) or 6 (class C1), and the three rows below decide which:
//
//   Row1    some center multiplicity >= 3                    -> C0
//   Row2    m[k] >= 4 on both sides                          -> C0
//   Row3    centers both 2 and some m[k] in {2, 3}           -> C0 iff one
//           side has exactly one non-leaf branch, else C1
//
// Here m[k] is the minimum multiplicity over the non-leaf branches of side k.
// The rows are tried in order; their guards provably cover every input, and
// classify() asserts that instead of assuming it.

#include <string>

#include "orient5/common.hpp"
#include "orient5/graph.hpp"
#include "orient5/profile.hpp"

namespace orient5 {

enum class Klass { C0, C1 };
enum class Rule { Row1, Row2, Row3C0, Row3C1 };

inline std::string to_string(Klass k) { return k == Klass::C0 ? "C0" : "C1"; }

inline std::string to_string(Rule r) {
  switch (r) {
    case Rule::Row1: return "Row1";
    case Rule::Row2: return "Row2";
    case Rule::Row3C0: return "Row3-C0";
    default: return "Row3-C1";
  }
}

struct Classification {
  Klass klass = Klass::C0;
  int orientation_number = 5;
  Rule rule = Rule::Row1;
  Diam5Profile profile;
};

inline Classification classify(const ParentTree& t, const MultiplicityMap& s) {
  Diam5Profile p = profile_diam5(t, s);
  int d = diameter(t);
  if (d != 5) {
    // profile_diam5 already rejects; kept for clarity of the contract here.
    fail_pre("tree diameter is " + std::to_string(d) + ", expected 5");
  }
  for (const auto& [name, value] : s)
    if (value < 2)
      fail_pre("multiplicity of '" + name + "' is " + std::to_string(value) +
               "; classification assumes every multiplicity is at least 2");

  Classification c;
  c.profile = p;
  const int s1 = s.at(p.c1), s2 = s.at(p.c2);
  if (s1 >= 3 || s2 >= 3) {
    c.klass = Klass::C0;
    c.rule = Rule::Row1;
  } else if (p.m[0] >= 4 && p.m[1] >= 4) {
    c.klass = Klass::C0;
    c.rule = Rule::Row2;
  } else {
    // Guard exhaustiveness: past Row1 both centers are 2; past Row2 some
    // side has m <= 3, and m >= 2 because all multiplicities are.
    bool small_m = (p.m[0] >= 2 && p.m[0] <= 3) || (p.m[1] >= 2 && p.m[1] <= 3);
    if (s1 != 2 || s2 != 2 || !small_m)
      fail_internal("decision rows failed to cover an input");
    if (p.nl[0].size() == 1 || p.nl[1].size() == 1) {
      c.klass = Klass::C0;
      c.rule = Rule::Row3C0;
    } else {
      c.klass = Klass::C1;
      c.rule = Rule::Row3C1;
    }
  }
  c.orientation_number = c.klass == Klass::C0 ? 5 : 6;
  return c;
}

enum class ClauseStatus { Vacuous, Checked, Violated };

inline std::string to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::Vacuous: return "vacuous";
    case ClauseStatus::Checked: return "checked";
    default: return "violated";
  }
}

// Two independent sanity clauses phrased through the set A of vertices with
// at least two others at distance exactly 5:
//   small_a:   |A| <= 1 forces class C0.
//   thin_c1:   if every non-center vertex has degree <= 2, |A| >= 2, and all
//              multiplicities equal 2, the class must be C1.
struct ASetReport {
  int a_size = 0;
  ClauseStatus small_a = ClauseStatus::Vacuous;
  ClauseStatus thin_c1 = ClauseStatus::Vacuous;
};

inline ASetReport check_aset_conditions(const ParentTree& t, const MultiplicityMap& s,
                                        const Classification& c) {
  ASetReport rep;
  auto a = a_set(t);
  rep.a_size = static_cast<int>(a.size());

  if (rep.a_size <= 1)
    rep.small_a = c.klass == Klass::C0 ? ClauseStatus::Checked : ClauseStatus::Violated;

  bool thin = true;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.names[v] == c.profile.c1 || t.names[v] == c.profile.c2) continue;
    if (t.degree(v) > 2) thin = false;
  }
  bool all_two = true;
  for (const auto& [name, value] : s) {
    (void)name;
    if (value != 2) all_two = false;
  }
  if (thin && all_two && rep.a_size >= 2)
    rep.thin_c1 = c.klass == Klass::C1 ? ClauseStatus::Checked : ClauseStatus::Violated;

  return rep;
}

}  // namespace orient5

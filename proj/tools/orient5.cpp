// orient5: classify vertex-multiplications of diameter-5 trees, build
// diameter-5 orientation certificates, and run the exhaustive oracle.
//
// Every run writes a one-line JSON manifest to stderr (tool, version,
// command, argv, exit code, and wall time when --timing is given). stdout
// carries only the command's result, so outputs stay byte-stable.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "orient5/classifier.hpp"
#include "orient5/constructions.hpp"
#include "orient5/dot.hpp"
#include "orient5/io.hpp"
#include "orient5/oracle.hpp"
#include "orient5/treegen.hpp"
#include "orient5/version.hpp"

namespace {

using orient5::json;

int exit_code(orient5::ErrorKind k) {
  switch (k) {
    case orient5::ErrorKind::InvalidInput: return 2;
    case orient5::ErrorKind::Precondition: return 3;
    case orient5::ErrorKind::BudgetExhausted: return 4;
    default: return 1;
  }
}

json dist_json(int d) {
  return d == orient5::kInfDist ? json("inf") : json(d);
}

void print_result(const json& out) { std::cout << out.dump(2) << "\n"; }

void apply_mult_overrides(orient5::MultiplicityMap& s, int mult_all,
                          const std::vector<std::string>& overrides) {
  if (mult_all > 0)
    for (auto& [name, value] : s) value = mult_all;
  for (const std::string& ov : overrides) {
    auto eq = ov.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == ov.size())
      orient5::fail_input("bad --mult '" + ov + "', expected NAME=COUNT");
    const std::string name = ov.substr(0, eq);
    if (s.find(name) == s.end())
      orient5::fail_input("--mult names unknown vertex '" + name + "'");
    try {
      s[name] = std::stoi(ov.substr(eq + 1));
    } catch (const std::exception&) {
      orient5::fail_input("bad --mult count in '" + ov + "'");
    }
  }
}

struct ClassifyOpts {
  std::string tree;
};

void run_classify(const ClassifyOpts& o) {
  auto [t, s] = orient5::tree_from_json(orient5::read_json_file(o.tree));
  orient5::Classification cls = orient5::classify(t, s);
  orient5::ASetReport aset = orient5::check_aset_conditions(t, s, cls);
  json out;
  out["class"] = to_string(cls.klass);
  out["rule"] = to_string(cls.rule);
  out["orientation_number"] = cls.orientation_number;
  out["centers"] = {cls.profile.c1, cls.profile.c2};
  out["non_leaf_branches"] = {cls.profile.nl[0].size(), cls.profile.nl[1].size()};
  out["m"] = {cls.profile.m[0], cls.profile.m[1]};
  out["thm14"] = {{"a_size", aset.a_size},
                  {"small_a", to_string(aset.small_a)},
                  {"thin_c1", to_string(aset.thin_c1)}};
  print_result(out);
}

struct CertifyOpts {
  std::string tree, out, dot;
  bool c1_search = false;
  uint64_t seed = 0;
  bool seed_given = false;
  uint64_t budget = 200000;
};

void run_certify(const CertifyOpts& o) {
  auto [t, s] = orient5::tree_from_json(orient5::read_json_file(o.tree));
  orient5::Classification cls = orient5::classify(t, s);
  json out;
  out["class"] = to_string(cls.klass);
  out["rule"] = to_string(cls.rule);

  if (cls.klass == orient5::Klass::C0) {
    orient5::Certificate cert = orient5::certify_c0(t, s);
    out["diameter"] = cert.verified.diameter;
    out["scheme"] = {{"template_multiplicities", json(cert.scheme.h_mult)},
                     {"max_cycle", cert.scheme.max_cycle},
                     {"role_swap", cert.scheme.role_swap}};
    json rec = orient5::orientation_record(cert.lifted.target, cert.lifted.orientation);
    if (!o.dot.empty())
      orient5::write_text_file(o.dot,
                               orient5::to_dot(cert.lifted.target, cert.lifted.orientation));
    if (o.out.empty()) {
      out["record"] = rec;
    } else {
      orient5::write_text_file(o.out, rec.dump(2) + "\n");
      out["record_path"] = o.out;
    }
    print_result(out);
    return;
  }

  if (!o.c1_search)
    orient5::fail_pre(
        "class is C1: no diameter-5 orientation exists; pass --c1-search with "
        "--seed to look for a diameter-6 witness");
  if (!o.seed_given) orient5::fail_input("--c1-search requires --seed");
  orient5::WitnessSearch ws = orient5::search_c1_witness(t, s, o.budget, o.seed);
  if (!ws.witness)
    orient5::fail_budget("no diameter-6 witness within " + std::to_string(o.budget) +
                         " evaluations (restarts: " + std::to_string(ws.restarts) + ")");
  out["diameter"] = ws.diameter;
  out["search"] = {{"seed", o.seed},
                   {"budget", o.budget},
                   {"evaluations", ws.evaluations},
                   {"restarts", ws.restarts}};
  json rec = orient5::orientation_record(ws.graph, *ws.witness);
  if (!o.dot.empty())
    orient5::write_text_file(o.dot, orient5::to_dot(ws.graph, *ws.witness));
  if (o.out.empty()) {
    out["record"] = rec;
  } else {
    orient5::write_text_file(o.out, rec.dump(2) + "\n");
    out["record_path"] = o.out;
  }
  print_result(out);
}

struct OracleOpts {
  std::string tree, graph, out;
  std::string filter = "strong";
  int target = -1;
  bool target_given = false;
  int threads = 0;
  int max_edges = 0;
  std::string checkpoint;
};

void run_oracle(const OracleOpts& o) {
  if (o.tree.empty() == o.graph.empty())
    orient5::fail_input("pass exactly one of --tree or --graph");
  orient5::SearchConfig cfg;
  cfg.filter = orient5::filter_from_string(o.filter);
  cfg.threads = o.threads;
  cfg.max_edges = o.max_edges;
  cfg.checkpoint_path = o.checkpoint;

  std::optional<orient5::MultiGraph> mg;
  orient5::Graph plain;
  if (!o.tree.empty()) {
    auto [t, s] = orient5::tree_from_json(orient5::read_json_file(o.tree));
    mg = orient5::multiply(t, s);
  } else {
    plain = orient5::graph_from_json(orient5::read_json_file(o.graph));
  }
  const orient5::Graph& g = mg ? static_cast<const orient5::Graph&>(*mg) : plain;

  json out;
  out["filter"] = to_string(cfg.filter);
  out["threads"] = orient5::resolve_threads(cfg);
  out["vertices"] = g.vertex_count();
  out["edges"] = g.edge_count();

  std::optional<uint64_t> witness;
  if (o.target_given) {
    orient5::ExistsResult res =
        mg ? orient5::exists_diameter_at_most(*mg, o.target, cfg)
           : orient5::exists_diameter_at_most(plain, o.target, cfg);
    out["mode"] = "exists";
    out["target"] = o.target;
    out["found"] = res.found;
    out["explored"] = res.explored;
    if (res.found) {
      out["diameter"] = res.diameter;
      out["witness_hex"] =
          orient5::orientation_to_hex(g, orient5::orientation_from_value(g, *res.witness));
      witness = res.witness;
    }
  } else {
    orient5::OracleResult res = orient5::orientation_number(g, cfg);
    out["mode"] = "min";
    out["orientation_number"] = dist_json(res.d_bar);
    out["explored"] = res.explored;
    if (res.witness) {
      out["witness_hex"] =
          orient5::orientation_to_hex(g, orient5::orientation_from_value(g, *res.witness));
      witness = res.witness;
    }
  }
  if (!o.out.empty()) {
    if (!witness) orient5::fail_pre("--out given but the search produced no witness");
    if (!mg) orient5::fail_input("--out needs a --tree input (records describe multiplications)");
    json rec =
        orient5::orientation_record(*mg, orient5::orientation_from_value(*mg, *witness));
    orient5::write_text_file(o.out, rec.dump(2) + "\n");
    out["record_path"] = o.out;
  }
  print_result(out);
}

struct GenOpts {
  std::string type, out;
  int n = 0;
  int a = 0, b = 0, c = 0, d = 0;
  uint64_t seed = 0;
  bool seed_given = false;
  int mult_all = 0;
  std::vector<std::string> mult;
};

void run_gen(const GenOpts& o) {
  orient5::ParentTree t;
  if (o.type == "path") {
    if (o.n < 2) orient5::fail_input("gen path needs --n");
    t = orient5::gen_path(o.n);
  } else if (o.type == "double-spider") {
    if (o.a < 1 || o.b < 1 || o.c < 1 || o.d < 1)
      orient5::fail_input("gen double-spider needs --a --b --c --d, all at least 1");
    t = orient5::gen_double_spider(o.a, o.b, o.c, o.d);
  } else if (o.type == "random") {
    if (o.n < 6) orient5::fail_input("gen random needs --n of at least 6");
    if (!o.seed_given) orient5::fail_input("gen random requires --seed");
    t = orient5::gen_random_d5(o.n, o.seed);
  } else {
    orient5::fail_input("unknown generator '" + o.type +
                        "' (expected path, double-spider, or random)");
  }
  orient5::MultiplicityMap s = orient5::uniform_multiplicity(t, 2);
  apply_mult_overrides(s, o.mult_all, o.mult);
  orient5::validate_multiplicities(t, s, 1);
  json out = orient5::tree_to_json(t, s);
  if (o.out.empty()) {
    print_result(out);
  } else {
    orient5::write_text_file(o.out, out.dump(2) + "\n");
    json note;
    note["tree_path"] = o.out;
    note["vertices"] = t.vertex_count();
    note["diameter"] = orient5::diameter(t);
    print_result(note);
  }
}

struct DualOpts {
  std::string record, out;
};

void run_dual(const DualOpts& o) {
  auto [g, fwd] = orient5::orientation_record_load(orient5::read_json_file(o.record));
  orient5::Orientation rev = orient5::reversed(g, fwd);
  orient5::DistanceReport before = orient5::digraph_diameter(g, fwd);
  orient5::DistanceReport after = orient5::digraph_diameter(g, rev);
  json out;
  out["diameter"] = dist_json(before.diameter);
  out["reversed_diameter"] = dist_json(after.diameter);
  out["strong"] = before.strong;
  json rec = orient5::orientation_record(g, rev);
  if (o.out.empty()) {
    out["record"] = rec;
  } else {
    orient5::write_text_file(o.out, rec.dump(2) + "\n");
    out["record_path"] = o.out;
  }
  print_result(out);
}

struct LiftOpts {
  std::string record, out;
  int mult_all = 0;
  std::vector<std::string> mult;
};

void run_lift(const LiftOpts& o) {
  auto [g, f] = orient5::orientation_record_load(orient5::read_json_file(o.record));
  orient5::MultiplicityMap lambda = g.s;
  apply_mult_overrides(lambda, o.mult_all, o.mult);
  orient5::LiftResult res = orient5::lift(g, f, lambda);
  json out;
  out["source_diameter"] = res.source_diameter;
  out["source_max_cycle"] = res.source_max_cycle;
  out["diameter"] = res.diameter;
  out["vertices"] = res.target.vertex_count();
  out["edges"] = res.target.edge_count();
  json rec = orient5::orientation_record(res.target, res.orientation);
  if (o.out.empty()) {
    out["record"] = rec;
  } else {
    orient5::write_text_file(o.out, rec.dump(2) + "\n");
    out["record_path"] = o.out;
  }
  print_result(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diameter-5 orientation toolkit"};
  app.set_version_flag("--version", orient5::kVersion);
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "report wall time in the stderr manifest");

  ClassifyOpts classify_opts;
  auto* classify_cmd =
      app.add_subcommand("classify", "decide the orientation-number class of a multiplication");
  classify_cmd->fallthrough();
  classify_cmd->add_option("--tree", classify_opts.tree, "tree JSON file")->required();
  classify_cmd->callback([&] { run_classify(classify_opts); });

  CertifyOpts certify_opts;
  auto* certify_cmd =
      app.add_subcommand("certify", "produce a verified diameter-5 orientation for class C0");
  certify_cmd->fallthrough();
  certify_cmd->add_option("--tree", certify_opts.tree, "tree JSON file")->required();
  certify_cmd->add_option("--out", certify_opts.out, "write the orientation record here");
  certify_cmd->add_option("--dot", certify_opts.dot, "write the oriented multiplication as DOT");
  certify_cmd->add_flag("--c1-search", certify_opts.c1_search,
                        "on class C1, search for a diameter-6 witness instead of failing");
  auto* seed_opt = certify_cmd->add_option("--seed", certify_opts.seed, "search seed");
  certify_cmd->add_option("--budget", certify_opts.budget,
                          "max diameter evaluations for --c1-search");
  certify_cmd->callback([&] {
    certify_opts.seed_given = seed_opt->count() > 0;
    run_certify(certify_opts);
  });

  OracleOpts oracle_opts;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "exhaustive minimum-diameter search over orientations");
  oracle_cmd->fallthrough();
  oracle_cmd->add_option("--tree", oracle_opts.tree, "tree JSON file (searches its multiplication)");
  oracle_cmd->add_option("--graph", oracle_opts.graph, "plain graph JSON file");
  oracle_cmd->add_option("--filter", oracle_opts.filter,
                         "search space filter: none, strong, or lemma22");
  auto* target_opt =
      oracle_cmd->add_option("--target", oracle_opts.target, "decide diameter <= target instead");
  oracle_cmd->add_option("--threads", oracle_opts.threads,
                         "worker threads (default: ORIENT5_THREADS or 1)");
  oracle_cmd->add_option("--max-edges", oracle_opts.max_edges, "override the edge-count cap");
  oracle_cmd->add_option("--checkpoint", oracle_opts.checkpoint,
                         "checkpoint file for resumable single-threaded runs");
  oracle_cmd->add_option("--out", oracle_opts.out, "write the witness record here (tree input)");
  oracle_cmd->callback([&] {
    oracle_opts.target_given = target_opt->count() > 0;
    run_oracle(oracle_opts);
  });

  GenOpts gen_opts;
  auto* gen_cmd = app.add_subcommand("gen", "generate tree JSON inputs");
  gen_cmd->fallthrough();
  gen_cmd->add_option("type", gen_opts.type, "path | double-spider | random")->required();
  gen_cmd->add_option("--n", gen_opts.n, "vertex count (path, random)");
  gen_cmd->add_option("--a", gen_opts.a, "double-spider: branches on side 1");
  gen_cmd->add_option("--b", gen_opts.b, "double-spider: deep leaves per side-1 branch");
  gen_cmd->add_option("--c", gen_opts.c, "double-spider: branches on side 2");
  gen_cmd->add_option("--d", gen_opts.d, "double-spider: deep leaves per side-2 branch");
  auto* gen_seed = gen_cmd->add_option("--seed", gen_opts.seed, "sampling seed (random)");
  gen_cmd->add_option("--mult-all", gen_opts.mult_all, "set every multiplicity");
  gen_cmd->add_option("--mult", gen_opts.mult, "override one multiplicity, NAME=COUNT");
  gen_cmd->add_option("--out", gen_opts.out, "write the tree JSON here");
  gen_cmd->callback([&] {
    gen_opts.seed_given = gen_seed->count() > 0;
    run_gen(gen_opts);
  });

  DualOpts dual_opts;
  auto* dual_cmd = app.add_subcommand("dual", "reverse every arc of an orientation record");
  dual_cmd->fallthrough();
  dual_cmd->add_option("--record", dual_opts.record, "orientation record JSON")->required();
  dual_cmd->add_option("--out", dual_opts.out, "write the reversed record here");
  dual_cmd->callback([&] { run_dual(dual_opts); });

  LiftOpts lift_opts;
  auto* lift_cmd =
      app.add_subcommand("lift", "extend an orientation record to larger multiplicities");
  lift_cmd->fallthrough();
  lift_cmd->add_option("--record", lift_opts.record, "orientation record JSON")->required();
  lift_cmd->add_option("--mult-all", lift_opts.mult_all, "set every target multiplicity");
  lift_cmd->add_option("--mult", lift_opts.mult, "override one target multiplicity, NAME=COUNT");
  lift_cmd->add_option("--out", lift_opts.out, "write the lifted record here");
  lift_cmd->callback([&] { run_lift(lift_opts); });

  const auto start = std::chrono::steady_clock::now();
  std::string command;
  int code = 0;
  try {
    app.parse(argc, argv);
    for (const CLI::App* sub : app.get_subcommands()) command = sub->get_name();
  } catch (const CLI::ParseError& e) {
    code = app.exit(e) == 0 ? 0 : 2;
  } catch (const orient5::Error& e) {
    for (const CLI::App* sub : app.get_subcommands()) command = sub->get_name();
    std::cerr << "error: " << e.what() << "\n";
    code = exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 1;
  }

  json manifest;
  manifest["tool"] = "orient5";
  manifest["version"] = orient5::kVersion;
  manifest["command"] = command;
  manifest["argv"] = std::vector<std::string>(argv + 1, argv + argc);
  manifest["exit"] = code;
  if (timing) {
    const auto end = std::chrono::steady_clock::now();
    manifest["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
  }
  std::cerr << manifest.dump() << "\n";
  return code;
}

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "orient5/constructions.hpp"
#include "orient5/io.hpp"
#include "orient5/oracle.hpp"
#include "orient5/treegen.hpp"

using namespace orient5;

namespace {

std::string tmp_name(const std::string& leaf) {
  return "/tmp/orient5-io-" + std::to_string(::getpid()) + "-" + leaf;
}

struct CliRun {
  int code = -1;
  std::string out, err;

  json out_json() const { return json::parse(out); }

  // The manifest is the last stderr line of every invocation.
  json manifest() const {
    std::istringstream in(err);
    std::string line, last;
    while (std::getline(in, line))
      if (!line.empty()) last = line;
    return json::parse(last);
  }
};

CliRun run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  std::string so = tmp_name("stdout-" + std::to_string(counter));
  std::string se = tmp_name("stderr-" + std::to_string(counter));
  ++counter;
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += std::string(ORIENT5_BIN) + " " + args + " >" + so + " 2>" + se;
  int status = std::system(cmd.c_str());
  CliRun r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  r.out = slurp(so);
  r.err = slurp(se);
  std::remove(so.c_str());
  std::remove(se.c_str());
  return r;
}

std::string write_tree(const std::string& leaf, const ParentTree& t, const MultiplicityMap& s) {
  std::string path = tmp_name(leaf);
  write_text_file(path, tree_to_json(t, s).dump(2) + "\n");
  return path;
}

}  // namespace

TEST_CASE("graph JSON round-trips and rejects malformed input") {
  Graph g = testutil::random_connected_graph(7, 3, 99);
  Graph back = graph_from_json(graph_to_json(g));
  REQUIRE(graph_hash(back) == graph_hash(g));

  REQUIRE_THROWS_AS(graph_from_json(json::object()), Error);
  REQUIRE_THROWS_AS(graph_from_json(json::parse(R"({"edges": []})")), Error);
  REQUIRE_THROWS_AS(graph_from_json(json::parse(R"({"edges": [["a"]]})")), Error);
  REQUIRE_THROWS_AS(graph_from_json(json::parse(R"({"edges": [["a", 3]]})")), Error);
}

TEST_CASE("tree JSON defaults, overrides, and rejections") {
  auto [t, s] = tree_from_json(json::parse(R"({"edges": [["a","b"],["b","c"]]})"));
  REQUIRE(t.vertex_count() == 3);
  for (const auto& [name, v] : s) {
    (void)name;
    REQUIRE(v == 2);  // multiplicities default to 2
  }

  auto [t2, s2] = tree_from_json(
      json::parse(R"({"edges": [["a","b"]], "multiplicities": {"a": 4}})"));
  REQUIRE(s2.at("a") == 4);
  REQUIRE(s2.at("b") == 2);

  ParentTree fig = testutil::fig_tree();
  MultiplicityMap sf = testutil::with_overrides(fig, 2, {{"va", 3}, {"vb.2", 4}});
  auto [t3, s3] = tree_from_json(tree_to_json(fig, sf));
  REQUIRE(graph_hash(t3) == graph_hash(fig));
  REQUIRE(s3 == sf);

  const char* bad[] = {
      R"({"edges": [["a","b"]], "multiplicities": {"zz": 2}})",
      R"({"edges": [["a","b"]], "multiplicities": {"a": 2.5}})",
      R"({"edges": [["a","b"]], "multiplicities": {"a": "two"}})",
      R"({"edges": [["a","b"]], "multiplicities": {"a": 0}})",
      R"({"edges": [["a","b"]], "multiplicities": [2]})",
      R"({"edges": [["a","b"],["a","b"]]})",
      R"({"edges": [["a","b"],["c","d"]]})",
  };
  for (const char* text : bad) {
    INFO(text);
    REQUIRE_THROWS_AS(tree_from_json(json::parse(text)), Error);
  }
}

TEST_CASE("orientation records verify what they describe") {
  ParentTree t = gen_path(6);
  MultiplicityMap s = uniform_multiplicity(t, 2);
  Certificate cert = certify_c0(t, s);
  json rec = orientation_record(cert.lifted.target, cert.lifted.orientation);

  auto [g, o] = orientation_record_load(rec);
  REQUIRE(graph_hash(g) == graph_hash(cert.lifted.target));
  REQUIRE(o.bits == cert.lifted.orientation.bits);

  json tampered = rec;
  tampered["graph_hash"] = hex_u64(0xdeadbeef);
  REQUIRE_THROWS_AS(orientation_record_load(tampered), Error);

  tampered = rec;
  tampered["multiplicities"]["p2"] = 3;  // graph no longer matches the hash
  REQUIRE_THROWS_AS(orientation_record_load(tampered), Error);

  tampered = rec;
  tampered["orientation_hex"] = "zz";
  REQUIRE_THROWS_AS(orientation_record_load(tampered), Error);

  tampered = rec;
  tampered.erase("orientation_hex");
  REQUIRE_THROWS_AS(orientation_record_load(tampered), Error);
}

TEST_CASE("file helpers fail loudly") {
  REQUIRE_THROWS_AS(read_json_file("/tmp/orient5-no-such-file.json"), Error);
  std::string path = tmp_name("not-json");
  write_text_file(path, "{broken");
  REQUIRE_THROWS_AS(read_json_file(path), Error);
  std::remove(path.c_str());
  REQUIRE_THROWS_AS(write_text_file("/no-such-dir/orient5/x", "hi"), Error);
}

TEST_CASE("cli: gen writes trees and is reproducible") {
  std::string path = tmp_name("gen-p6.json");
  CliRun r = run_cli("gen path --n 6 --out " + path);
  REQUIRE(r.code == 0);
  json note = r.out_json();
  REQUIRE(note["tree_path"] == path);
  REQUIRE(note["vertices"] == 6);
  REQUIRE(note["diameter"] == 5);
  auto [t, s] = tree_from_json(read_json_file(path));
  REQUIRE(t.vertex_count() == 6);
  REQUIRE(s.at("p1") == 2);
  std::remove(path.c_str());

  CliRun a = run_cli("gen random --n 9 --seed 5");
  CliRun b = run_cli("gen random --n 9 --seed 5");
  REQUIRE(a.code == 0);
  REQUIRE(a.out == b.out);
  REQUIRE(run_cli("gen random --n 9").code == 2);  // seed is mandatory

  CliRun ds = run_cli("gen double-spider --a 2 --b 1 --c 2 --d 1 --mult a1=4");
  REQUIRE(ds.code == 0);
  auto [dt, dss] = tree_from_json(ds.out_json());
  REQUIRE(dss.at("a1") == 4);
  REQUIRE(diameter(dt) == 5);
}

TEST_CASE("cli: classify reports the full decision") {
  std::string path = tmp_name("cls-p6.json");
  ParentTree t = gen_path(6);
  write_text_file(path, tree_to_json(t, uniform_multiplicity(t, 2)).dump() + "\n");

  CliRun r = run_cli("classify --tree " + path);
  REQUIRE(r.code == 0);
  json out = r.out_json();
  REQUIRE(out["class"] == "C0");
  REQUIRE(out["rule"] == "Row3-C0");
  REQUIRE(out["orientation_number"] == 5);
  REQUIRE(out["centers"] == json({"p3", "p4"}));
  REQUIRE(out["non_leaf_branches"] == json({1, 1}));
  REQUIRE(out["m"] == json({2, 2}));
  REQUIRE(out["thm14"]["a_size"] == 0);
  REQUIRE(out["thm14"]["small_a"] == "checked");
  REQUIRE(out["thm14"]["thin_c1"] == "vacuous");
  std::remove(path.c_str());

  // Wrong diameter is a precondition failure, not bad input.
  ParentTree p7 = gen_path(7);
  std::string path7 = write_tree("cls-p7.json", p7, uniform_multiplicity(p7, 2));
  CliRun bad = run_cli("classify --tree " + path7);
  REQUIRE(bad.code == 3);
  REQUIRE(bad.err.find("error:") != std::string::npos);
  std::remove(path7.c_str());

  REQUIRE(run_cli("classify --tree /tmp/orient5-missing.json").code == 2);
}

TEST_CASE("cli: certify C0 produces a loadable record and DOT") {
  ParentTree t = testutil::fig_tree();
  std::string tree = write_tree("cert-fig.json", t, uniform_multiplicity(t, 2));
  std::string rec = tmp_name("cert-fig-rec.json");
  std::string dot = tmp_name("cert-fig.dot");

  CliRun r = run_cli("certify --tree " + tree + " --out " + rec + " --dot " + dot);
  REQUIRE(r.code == 0);
  json out = r.out_json();
  REQUIRE(out["class"] == "C0");
  REQUIRE(out["rule"] == "Row3-C0");
  REQUIRE(out["diameter"] == 5);
  REQUIRE(out["scheme"]["role_swap"] == true);
  REQUIRE(out["record_path"] == rec);

  auto [g, o] = orientation_record_load(read_json_file(rec));
  DistanceReport rep = digraph_diameter(g, o);
  REQUIRE(rep.strong);
  REQUIRE(rep.diameter == 5);

  std::ifstream din(dot);
  std::string head;
  std::getline(din, head);
  REQUIRE(head.find("digraph") == 0);

  // Without --out the record rides along in the result.
  CliRun inl = run_cli("certify --tree " + tree);
  REQUIRE(inl.code == 0);
  auto [g2, o2] = orientation_record_load(inl.out_json()["record"]);
  REQUIRE(g2.edge_count() == g.edge_count());
  REQUIRE(digraph_diameter(g2, o2).diameter == 5);

  std::remove(tree.c_str());
  std::remove(rec.c_str());
  std::remove(dot.c_str());
}

TEST_CASE("cli: certify C1 refuses, then searches when asked") {
  ParentTree t = gen_double_spider(2, 1, 2, 1);
  std::string tree = write_tree("cert-ds.json", t, uniform_multiplicity(t, 2));

  CliRun refuse = run_cli("certify --tree " + tree);
  REQUIRE(refuse.code == 3);
  REQUIRE(refuse.err.find("--c1-search") != std::string::npos);

  REQUIRE(run_cli("certify --tree " + tree + " --c1-search").code == 2);

  CliRun search = run_cli("certify --tree " + tree + " --c1-search --seed 11");
  REQUIRE(search.code == 0);
  json out = search.out_json();
  REQUIRE(out["class"] == "C1");
  REQUIRE(out["diameter"] == 6);
  REQUIRE(out["search"]["seed"] == 11);
  auto [g, o] = orientation_record_load(out["record"]);
  REQUIRE(testutil::ref_directed_diameter(g, o) == 6);

  CliRun broke = run_cli("certify --tree " + tree + " --c1-search --seed 3 --budget 2");
  REQUIRE(broke.code == 4);

  std::remove(tree.c_str());
}

TEST_CASE("cli: oracle minimum search over a tree input") {
  ParentTree t = gen_path(6);
  std::string tree = write_tree("oracle-p6.json", t, uniform_multiplicity(t, 2));

  CliRun r = run_cli("oracle --tree " + tree);
  REQUIRE(r.code == 0);
  json out = r.out_json();
  REQUIRE(out["mode"] == "min");
  REQUIRE(out["filter"] == "strong");
  REQUIRE(out["threads"] == 1);
  REQUIRE(out["vertices"] == 12);
  REQUIRE(out["edges"] == 20);
  REQUIRE(out["orientation_number"] == 5);
  REQUIRE(out["explored"] == 24120);
  REQUIRE(out["witness_hex"] == "56536");

  CliRun env = run_cli("oracle --tree " + tree + " --target 5", "ORIENT5_THREADS=2");
  REQUIRE(env.code == 0);
  REQUIRE(env.out_json()["threads"] == 2);
  REQUIRE(env.out_json()["found"] == true);

  std::remove(tree.c_str());
}

TEST_CASE("cli: oracle on plain graphs and the decision filter") {
  std::string graph = tmp_name("oracle-k22.json");
  write_text_file(graph,
                  R"({"edges": [["x1","y1"],["x1","y2"],["x2","y1"],["x2","y2"]]})");
  CliRun r = run_cli("oracle --graph " + graph);
  REQUIRE(r.code == 0);
  json out = r.out_json();
  REQUIRE(out["orientation_number"] == 3);
  REQUIRE(out["explored"] == 2);
  REQUIRE(out["witness_hex"] == "6");

  ParentTree ds = gen_double_spider(2, 1, 2, 1);
  std::string tree = write_tree("oracle-ds.json", ds, uniform_multiplicity(ds, 2));
  CliRun decide = run_cli("oracle --tree " + tree + " --filter lemma22 --target 5");
  REQUIRE(decide.code == 0);
  json dec = decide.out_json();
  REQUIRE(dec["mode"] == "exists");
  REQUIRE(dec["found"] == false);
  REQUIRE(dec["explored"] == 937984);

  // Misuse is caught before any sweep.
  REQUIRE(run_cli("oracle --tree " + tree + " --graph " + graph).code == 2);
  REQUIRE(run_cli("oracle --filter strong").code == 2);
  REQUIRE(run_cli("oracle --tree " + tree + " --filter fast").code == 2);
  REQUIRE(run_cli("oracle --tree " + tree + " --filter lemma22").code == 3);
  REQUIRE(run_cli("oracle --graph " + graph + " --target 2 --out /tmp/x.json").code == 3);
  REQUIRE(run_cli("oracle --graph " + graph + " --target 3 --out /tmp/x.json").code == 2);

  std::remove(graph.c_str());
  std::remove(tree.c_str());
}

TEST_CASE("cli: dual and lift run off certify output") {
  ParentTree t = gen_path(6);
  std::string tree = write_tree("pipe-p6.json", t, uniform_multiplicity(t, 2));
  std::string rec = tmp_name("pipe-rec.json");
  REQUIRE(run_cli("certify --tree " + tree + " --out " + rec).code == 0);

  CliRun dual1 = run_cli("dual --record " + rec);
  REQUIRE(dual1.code == 0);
  json d1 = dual1.out_json();
  REQUIRE(d1["diameter"] == 5);
  REQUIRE(d1["reversed_diameter"] == 5);
  REQUIRE(d1["strong"] == true);

  // Reversing twice restores the original bits.
  std::string rev = tmp_name("pipe-rev.json");
  REQUIRE(run_cli("dual --record " + rec + " --out " + rev).code == 0);
  CliRun dual2 = run_cli("dual --record " + rev);
  REQUIRE(dual2.code == 0);
  REQUIRE(dual2.out_json()["record"]["orientation_hex"] ==
          read_json_file(rec)["orientation_hex"]);

  CliRun lifted = run_cli("lift --record " + rec + " --mult-all 3 --mult p2=4");
  REQUIRE(lifted.code == 0);
  json lf = lifted.out_json();
  REQUIRE(lf["source_diameter"] == 5);
  REQUIRE(lf["diameter"] == 5);
  REQUIRE(lf["vertices"] == 19);
  auto [g, o] = orientation_record_load(lf["record"]);
  REQUIRE(g.s.at("p2") == 4);
  REQUIRE(testutil::ref_directed_diameter(g, o) == 5);

  REQUIRE(run_cli("lift --record " + rec + " --mult-all 1").code == 3);
  REQUIRE(run_cli("lift --record " + rec + " --mult zz=3").code == 2);

  std::remove(tree.c_str());
  std::remove(rec.c_str());
  std::remove(rev.c_str());
}

TEST_CASE("cli: every run leaves a manifest on stderr") {
  ParentTree t = gen_path(6);
  std::string tree = write_tree("mani-p6.json", t, uniform_multiplicity(t, 2));

  CliRun ok = run_cli("classify --tree " + tree);
  json m = ok.manifest();
  REQUIRE(m["tool"] == "orient5");
  REQUIRE(m["version"] == "1.0.0");
  REQUIRE(m["command"] == "classify");
  REQUIRE(m["argv"] == json({"classify", "--tree", tree}));
  REQUIRE(m["exit"] == 0);
  REQUIRE_FALSE(m.contains("wall_ms"));

  CliRun timed = run_cli("classify --tree " + tree + " --timing");
  json tm = timed.manifest();
  REQUIRE(tm["exit"] == 0);
  REQUIRE(tm["wall_ms"].is_number());

  CliRun fail = run_cli("classify --tree /tmp/orient5-missing.json --timing");
  REQUIRE(fail.code == 2);
  json fm = fail.manifest();
  REQUIRE(fm["command"] == "classify");
  REQUIRE(fm["exit"] == 2);
  REQUIRE(fm["wall_ms"].is_number());

  REQUIRE(run_cli("").code == 2);           // a subcommand is required
  REQUIRE(run_cli("frobnicate").code == 2);  // and it has to exist
  CliRun ver = run_cli("--version");
  REQUIRE(ver.code == 0);
  REQUIRE(ver.out.find("1.0.0") != std::string::npos);

  std::remove(tree.c_str());
}

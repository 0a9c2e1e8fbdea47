#include <doctest.h>

#include <json.hpp>

#include "support/cli_harness.hpp"
#include "tdmm/generators.hpp"
#include "tdmm/graph.hpp"

using namespace tdmm;
using namespace tdmm::testing;

namespace {

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("gamma-t and mu-star") {
  ScratchDir dir("solvers");
  auto spider3 = dir.write("spider3.txt", serialize_edge_list(spider(3)));
  auto c4 = dir.write("c4.txt", serialize_edge_list(cycle(4)));
  auto lonely = dir.write("lonely.txt", "vertices: z\na b\n");

  auto r = run_cli({"gamma-t", spider3});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "gamma_t = 6"));

  r = run_cli({"mu-star", c4});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "mu_star = 2"));

  r = run_cli({"gamma-t", lonely});
  CHECK(r.exit_code == 2);
  CHECK(contains(r.err, "isolated vertex: gamma_t undefined"));

  r = run_cli({"gamma-t", dir.path("missing.txt")});
  CHECK(r.exit_code == 2);

  auto bad = dir.write("bad.txt", "a a\n");
  r = run_cli({"mu-star", bad});
  CHECK(r.exit_code == 2);
  CHECK(contains(r.err, "self-loop"));
}

TEST_CASE("bounds") {
  ScratchDir dir("bounds");
  auto r = run_cli({"bounds", dir.write("k4.txt", serialize_edge_list(complete(4)))});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "delta = 3"));
  CHECK(contains(r.out, "gamma_t = 2"));
  CHECK(contains(r.out, "bound = 3"));
  CHECK(contains(r.out, "slack = 1"));

  r = run_cli({"bounds", dir.write("s2.txt", serialize_edge_list(spider(2)))});
  CHECK(contains(r.out, "slack = 0"));
  r = run_cli({"bounds", dir.write("p2.txt", serialize_edge_list(prop2_extremal(2, 3)))});
  CHECK(contains(r.out, "slack = 0"));
  CHECK(contains(r.out, "delta = 3"));
}

TEST_CASE("recognize") {
  ScratchDir dir("recognize");
  auto grid = dir.write("g2.txt", serialize_edge_list(subdivided_grid(2)));
  auto cert = dir.path("cert.txt");
  auto r = run_cli({"recognize", grid, "--oracle", "--certificate-out", cert});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "u1 v1"));
  CHECK(contains(r.out, "u2 v2"));
  CHECK(contains(r.out, "u3 v3"));
  CHECK(contains(r.out, "agrees"));

  auto v = run_cli({"verify", grid, cert});
  CHECK(v.exit_code == 0);
  CHECK(contains(v.out, "verdict: yes"));

  r = run_cli({"recognize", dir.write("c7.txt", serialize_edge_list(cycle(7)))});
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "script-M empty, not maximal"));

  r = run_cli({"recognize", dir.write("c3.txt", "u v\nu w1\nv w1\n")});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "exceptional family K, n=1"));

  r = run_cli({"recognize", dir.write("s2.txt", serialize_edge_list(spider(2)))});
  CHECK(r.exit_code == 2);
  CHECK(contains(r.err, "verify"));

  r = run_cli({"recognize", dir.write("k4.txt", serialize_edge_list(complete(4)))});
  CHECK(r.exit_code == 2);
}

TEST_CASE("verify") {
  ScratchDir dir("verify");
  auto c4 = dir.write("c4.txt", serialize_edge_list(cycle(4)));
  auto r = run_cli({"verify", c4, dir.write("pm.txt", "v0 v1\nv2 v3\n")});
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "condition (i): fails"));
  CHECK(contains(r.out, "v0"));

  r = run_cli({"verify", c4, dir.write("half.txt", "v0 v1\n")});
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "fails"));

  r = run_cli({"verify", c4, dir.write("clash.txt", "v0 v1\nv1 v2\n")});
  CHECK(r.exit_code == 1);

  r = run_cli({"verify", c4, dir.write("chord.txt", "v0 v2\n")});
  CHECK(r.exit_code == 2);

  auto s2 = dir.write("s2.txt", serialize_edge_list(spider(2)));
  r = run_cli({"verify", s2, dir.write("xy.txt", "x1 y1\nx2 y2\n")});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "M- = x1 y1, x2 y2"));
}

TEST_CASE("generate") {
  auto r = run_cli({"generate", "spider", "2"});
  CHECK(r.exit_code == 0);
  Graph g = parse_edge_list(r.out);
  CHECK(g.vertex_count() == 7);
  CHECK(g.edge_count() == 6);

  r = run_cli({"generate", "prop2", "2", "3"});
  CHECK(r.exit_code == 0);
  CHECK(parse_edge_list(r.out).vertex_count() == 8);

  auto a = run_cli({"generate", "family-f", "--seed", "7"});
  auto b = run_cli({"generate", "family-f", "--seed", "7"});
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "# matching:"));

  CHECK(run_cli({"generate", "spider", "0"}).exit_code == 2);
  CHECK(run_cli({"generate", "nonsense", "3"}).exit_code == 2);
  CHECK(run_cli({"generate", "cycle"}).exit_code == 2);
}

TEST_CASE("generated certificates round-trip through verify") {
  ScratchDir dir("roundtrip");
  for (const char* seed : {"1", "2", "3", "4", "5"}) {
    auto matching = dir.path(std::string("m") + seed + ".txt");
    auto r = run_cli({"generate", "family-f", "--seed", seed, "--matching-out", matching});
    REQUIRE(r.exit_code == 0);
    auto graph = dir.write(std::string("g") + seed + ".txt", r.out);
    CHECK(run_cli({"verify", graph, matching}).exit_code == 0);
  }
}

TEST_CASE("json output") {
  ScratchDir dir("json");
  auto c6 = dir.write("c6.txt", serialize_edge_list(cycle(6)));
  auto r = run_cli({"--json", "recognize", c6});
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "recognize");
  CHECK(doc["exit_status"] == 0);
  CHECK(doc["result"]["verdict"] == true);
  CHECK(r.out == run_cli({"--json", "recognize", c6}).out);

  r = run_cli({"--json", "gamma-t", c6});
  doc = nlohmann::json::parse(r.out);
  CHECK(doc["result"]["gamma_t"] == 4);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).exit_code == 2);
  CHECK(run_cli({"frobnicate"}).exit_code == 2);
  CHECK(run_cli({"--help"}).exit_code == 0);
}

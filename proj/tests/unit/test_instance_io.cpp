#include <map>

#include "cedom/generators.hpp"
#include "cedom/instance_io.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace cedom;

TEST_CASE("plain edge list") {
  auto inst = parse_instance("3\n0 1\n1 2\n");
  CHECK(inst.graph == cedom::testing::path(3));
  CHECK(inst.identity_labels());
}

TEST_CASE("comments and blank lines are skipped") {
  auto inst = parse_instance("# a path\n3\n\n# first edge\n0 1\n  # indented comment\n1 2\n");
  CHECK(inst.graph == cedom::testing::path(3));
}

TEST_CASE("duplicate edges collapse") {
  auto inst = parse_instance("2\n0 1\n1 0\n0 1\n");
  CHECK(inst.graph.m() == 1);
}

TEST_CASE("parse errors carry line numbers") {
  SUBCASE("out of range") {
    try {
      parse_instance("2\n0 3\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
  }
  SUBCASE("self-loop") {
    try {
      parse_instance("3\n0 1\n# c\n2 2\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
    }
  }
  SUBCASE("malformed lines") {
    CHECK_THROWS_AS(parse_instance("3\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("three\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("3 4\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance(""), ParseError);
    CHECK_THROWS_AS(parse_instance("2\na b\nb c\n"), ParseError);  // 3 labels, 2 vertices
  }
}

TEST_CASE("symbolic labels are renumbered by first appearance") {
  auto inst = parse_instance("4\nalice bob\nbob carol\n");
  CHECK(inst.labels == std::vector<std::string>{"alice", "bob", "carol", "3"});
  CHECK(inst.graph.adjacent(0, 1));
  CHECK(inst.graph.adjacent(1, 2));
  CHECK(inst.graph.degree(3) == 0);
  CHECK_FALSE(inst.identity_labels());
}

TEST_CASE("DIMACS input") {
  auto inst = parse_instance("c comment\np edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(inst.graph == cedom::testing::path(3));
  CHECK(inst.labels == std::vector<std::string>{"1", "2", "3"});
  CHECK_THROWS_AS(parse_instance("p edge 3 1\ne 1 4\n"), ParseError);
}

TEST_CASE("bundled instances load") {
  auto zachary = load_instance(CEDOM_DATA_DIR "/zachary.txt");
  CHECK(zachary.name == "zachary");
  CHECK(zachary.graph.n() == 34);
  CHECK(zachary.graph.m() == 78);
  auto lesmis = load_instance(CEDOM_DATA_DIR "/lesmis.txt");
  CHECK(lesmis.graph.n() == 77);
  CHECK(lesmis.graph.m() == 254);
  CHECK(lesmis.labels[0] == "Napoleon");
  CHECK_THROWS(load_instance(CEDOM_DATA_DIR "/no_such_file.txt"));
}

TEST_CASE("property: write then parse reproduces the graph") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = cedom::testing::random_graph(static_cast<Vertex>(1 + rng.below(40)), 0.2, rng);
    auto text = write_instance(g);
    auto back = parse_instance(text);
    REQUIRE(back.graph == g);
    REQUIRE(write_instance(back.graph) == text);
  }
  auto lesmis = load_instance(CEDOM_DATA_DIR "/lesmis.txt");
  // Symbolic labels are renumbered on reading, so compare edges by label.
  auto again = parse_instance(write_instance(lesmis.graph, lesmis.labels));
  REQUIRE(again.graph.n() == lesmis.graph.n());
  REQUIRE(again.graph.m() == lesmis.graph.m());
  std::map<std::string, Vertex> id_of;
  for (Vertex v = 0; v < again.graph.n(); ++v) id_of[again.labels[v]] = v;
  for (auto [u, v] : lesmis.graph.edges()) CHECK(again.graph.adjacent(id_of.at(lesmis.labels[u]), id_of.at(lesmis.labels[v])));
}

TEST_CASE("generator specs") {
  CHECK(generate_instance("grid:3,4").graph == grid(3, 4));
  CHECK(generate_instance("grid:3,4").name == "G(3,4)");
  CHECK(generate_instance("snark:5").graph == flower_snark(5));
  CHECK(generate_instance("er:30,0.2,7").graph == erdos_renyi(30, 0.2, 7));
  CHECK(generate_instance("erdeg:100,3,1").name == "random100_3");
  CHECK(generate_instance("udg:1,0.5,1,1,0").name == "UDG_1-0.5-1-1_0");
  CHECK_THROWS_AS(generate_instance("grid:3"), std::invalid_argument);
  CHECK_THROWS_AS(generate_instance("grid:3,x"), std::invalid_argument);
  CHECK_THROWS_AS(generate_instance("hypercube:4"), std::invalid_argument);
  CHECK_THROWS_AS(generate_instance("udg:2,0.01,100,100,0"), std::invalid_argument);
}

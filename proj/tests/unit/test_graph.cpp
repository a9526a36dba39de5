#include <algorithm>
#include <random>

#include "doctest.h"
#include "hyperlay/graph.hpp"
#include "oracles.hpp"

using namespace hyperlay;

TEST_CASE("edge list parsing") {
  const ParsedGraph p = parse_graph("0 1\n1 2", GraphFormat::edge_list);
  CHECK(p.graph.size() == 3);
  CHECK(p.graph.edge_count() == 2);
  CHECK_FALSE(p.graph.weighted());

  const ParsedGraph q = parse_graph("# comment\n0 1 2.5\n\n1 2 # trailing\n3\n2 3\n", GraphFormat::edge_list);
  CHECK(q.graph.size() == 4);
  CHECK(q.graph.weighted());
  CHECK(q.graph.edges()[0].weight == 2.5);
}

TEST_CASE("edge list errors carry line numbers") {
  try {
    parse_graph("0 a b", GraphFormat::edge_list);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  try {
    parse_graph("0 1\n1 1\n", GraphFormat::edge_list);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_graph("0 1\n1 0\n", GraphFormat::edge_list), ParseError);
  CHECK_THROWS_AS(parse_graph("0 1 -2\n", GraphFormat::edge_list), ParseError);
  CHECK_THROWS_AS(parse_graph("", GraphFormat::edge_list), ParseError);
}

TEST_CASE("disconnected input is rejected with the offending component") {
  try {
    parse_graph("0 1\n2 3\n", GraphFormat::edge_list);
    FAIL("expected a disconnected graph error");
  } catch (const DisconnectedGraphError& e) {
    CHECK(e.component_count() == 2);
    CHECK(e.component() == std::vector<NodeId>{2, 3});
  }
}

TEST_CASE("DOT subset") {
  const char* text = R"(graph G {
  // three clustered nodes
  a [label="Alpha", cluster=1, pos="0,0"];
  b [cluster=1, pos="2,0", color=red];
  c [cluster=2 pos="1,1.5"]
  a -- b -- c;
  c -- a [weight=2];
  graph [polygons="1:#ff0000:0,0 2,0 1,-1;2:#00ff00:1,1.5 2,2 0,2"];
}
)";
  const ParsedGraph p = parse_graph(text, GraphFormat::dot);
  const Graph& g = p.graph;
  REQUIRE(g.size() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.nodes()[0].label == "Alpha");
  CHECK(g.nodes()[1].label == "b");
  CHECK(g.nodes()[0].cluster == 1);
  CHECK(g.nodes()[2].cluster == 2);
  CHECK(g.has_positions());
  CHECK(g.nodes()[2].position->y == 1.5);
  REQUIRE(g.polygons().size() == 2);
  CHECK(g.polygons()[0].color == "#ff0000");
  CHECK(g.polygons()[1].vertices.size() == 3);
  CHECK(g.weighted());
  // Unknown attribute produces a warning, not an error.
  CHECK(std::any_of(p.warnings.begin(), p.warnings.end(),
                    [](const std::string& w) { return w.find("color") != std::string::npos; }));
}

TEST_CASE("DOT errors") {
  CHECK_THROWS_AS(parse_graph("digraph { a -> b }", GraphFormat::dot), ParseError);
  CHECK_THROWS_AS(parse_graph("graph { a -- a }", GraphFormat::dot), ParseError);
  CHECK_THROWS_AS(parse_graph("graph { a -- b", GraphFormat::dot), ParseError);
  try {
    parse_graph("graph {\n a -- b\n b -- \n}", GraphFormat::dot);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("format from path") {
  CHECK(format_from_path("x.dot") == GraphFormat::dot);
  CHECK(format_from_path("x.gv") == GraphFormat::dot);
  CHECK(format_from_path("x.el") == GraphFormat::edge_list);
  CHECK(format_from_path("x.txt") == GraphFormat::edge_list);
}

TEST_CASE("edge list round trip") {
  const Graph g = random_graph(30, 60, 5);
  const Graph h = parse_graph(write_edge_list(g), GraphFormat::edge_list).graph;
  REQUIRE(h.size() == g.size());
  REQUIRE(h.edge_count() == g.edge_count());
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    CHECK(h.edges()[k].u == g.edges()[k].u);
    CHECK(h.edges()[k].v == g.edges()[k].v);
  }
}

TEST_CASE("apsp examples") {
  CHECK(apsp(cycle_graph(4)).max() == 2.0);
  CHECK(apsp(path_graph(5))(0, 4) == 4.0);
  CHECK(apsp(cube_graph()).max() == 3.0);
  CHECK(apsp(cube_graph()).min() == 1.0);
}

TEST_CASE("apsp matches closed forms") {
  for (std::size_t n : {2, 7, 20}) {
    const DistanceMatrix d = apsp(path_graph(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(d(i, j) == static_cast<double>(i > j ? i - j : j - i));
  }
  for (std::size_t n : {3, 8, 25}) {
    const DistanceMatrix d = apsp(cycle_graph(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t k = i > j ? i - j : j - i;
        CHECK(d(i, j) == static_cast<double>(std::min(k, n - k)));
      }
  }
  // Heap-ordered binary tree: distance is the depth sum down to the lowest
  // common ancestor.
  const DistanceMatrix d = apsp(binary_tree(5));
  auto depth = [](std::size_t v) {
    int k = 0;
    for (++v; v > 1; v >>= 1) ++k;
    return k;
  };
  for (std::size_t i = 0; i < 63; ++i)
    for (std::size_t j = 0; j < 63; ++j) {
      std::size_t a = i, b = j;
      while (a != b) (a > b ? a : b) = ((a > b ? a : b) - 1) / 2;
      CHECK(d(i, j) == static_cast<double>(depth(i) + depth(j) - 2 * depth(a)));
    }
}

TEST_CASE("apsp properties on random graphs") {
  const Graph g = random_graph(60, 150, 3);
  const DistanceMatrix d = apsp(g);
  for (std::size_t s = 0; s < g.size(); s += 7) {
    const auto ref = oracle::bfs(g, s);
    for (std::size_t t = 0; t < g.size(); ++t) CHECK(d(s, t) == ref[t]);
  }
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  for (int k = 0; k < 2000; ++k) {
    const std::size_t i = pick(rng), j = pick(rng), m = pick(rng);
    CHECK(d(i, j) == d(j, i));
    CHECK(d(i, j) <= d(i, m) + d(m, j));
  }
}

TEST_CASE("weighted apsp uses edge weights") {
  const Graph g = parse_graph("0 1 1\n1 2 1\n0 2 5\n", GraphFormat::edge_list).graph;
  const DistanceMatrix d = apsp(g);
  CHECK(d(0, 2) == 2.0);
  CHECK(d(2, 0) == 2.0);
}

TEST_CASE("distance matrix validation") {
  CHECK_THROWS_AS(DistanceMatrix(2, {0, 1, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(DistanceMatrix(2, {1, 1, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(DistanceMatrix(2, {0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(DistanceMatrix(2, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("generators") {
  const Graph t = binary_tree(3);
  CHECK(t.size() == 15);
  CHECK(t.edge_count() == 14);
  const Graph g = grid_graph(10, 10);
  CHECK(g.size() == 100);
  CHECK(g.edge_count() == 180);
  const Graph r = random_graph(500, 1500, 7);
  CHECK(r.size() == 500);
  CHECK(r.edge_count() == 1500);
  CHECK(r.connected());
  const Graph tri = triangular_lattice(4);
  CHECK(tri.size() == 10);
  CHECK(tri.edge_count() == 18);
  CHECK(cube_graph().edge_count() == 12);
  CHECK(random_tree(50, 1).edge_count() == 49);
  CHECK(random_tree(50, 1).connected());
}

TEST_CASE("generators are reproducible and validate parameters") {
  auto same = [](const Graph& a, const Graph& b) {
    if (a.edge_count() != b.edge_count()) return false;
    for (std::size_t k = 0; k < a.edge_count(); ++k)
      if (a.edges()[k].u != b.edges()[k].u || a.edges()[k].v != b.edges()[k].v) return false;
    return true;
  };
  CHECK(same(random_graph(40, 80, 9), random_graph(40, 80, 9)));
  CHECK_FALSE(same(random_graph(40, 80, 9), random_graph(40, 80, 10)));
  CHECK(same(random_tree(40, 9), random_tree(40, 9)));
  CHECK_THROWS_AS(random_graph(10, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_graph(5, 11, 1), std::invalid_argument);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  const std::size_t params[] = {4, 3};
  CHECK(generate("grid", params).size() == 12);
  CHECK_THROWS_AS(generate("grid", std::span<const std::size_t>(params, 1)), std::invalid_argument);
  CHECK_THROWS_AS(generate("petersen", {}), std::invalid_argument);
}

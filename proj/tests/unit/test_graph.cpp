#include <doctest.h>

#include <map>
#include <random>
#include <sstream>

#include "chromhom/errors.hpp"
#include "chromhom/graph.hpp"
#include "random_graphs.hpp"

using namespace chromhom;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

int parse_error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return static_cast<int>(e.position());
  }
  return -1;
}

std::map<Partition, int> type_counts(const Graph& g, int i) {
  std::map<Partition, int> out;
  for (const auto& f : spanning_subgraphs(g, i)) ++out[f.partition_type()];
  return out;
}

}  // namespace

TEST_CASE("star generator") {
  CHECK(star(4).edges() == std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}});
  CHECK(star(2).edges() == std::vector<Edge>{{1, 2}});
  const Graph s7 = star(7);
  CHECK(s7.edge_count() == 6);
  for (const auto& e : s7.edges()) CHECK(e.first == 1);
  CHECK_THROWS_AS(star(1), std::invalid_argument);
}

TEST_CASE("graph validation") {
  CHECK(Graph(3, {{3, 1}, {2, 1}}).edges() == std::vector<Edge>{{1, 2}, {1, 3}});
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("graph file parsing") {
  const Graph g = parse("# a path\nn 3\n1 2\n2 3  # trailing comment\n\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
  CHECK(parse(g.to_text()) == g);
  CHECK(parse("n 2\n1 2\n").edge_count() == 1);
}

TEST_CASE("graph file errors report the line") {
  CHECK(parse_error_line("1 2\n") == 1);
  CHECK(parse_error_line("n 3\n1 2\n2 x\n") == 3);
  CHECK(parse_error_line("n 3\n3 1\n") == 2);
  CHECK(parse_error_line("n 3\n1 4\n") == 2);
  CHECK(parse_error_line("n 3\n1 2 3\n") == 2);
  CHECK(parse_error_line("n 3\n1 2\n1 2\n") >= 1);
  CHECK_THROWS_AS(parse("# only comments\n"), ParseError);
  CHECK_THROWS(load_graph("/nonexistent/graph.txt"));
}

TEST_CASE("spanning subgraph counts on stars") {
  for (int n = 3; n <= 7; ++n) {
    const Graph g = star(n);
    CHECK(spanning_subgraphs(g, 1).size() == static_cast<std::size_t>(n - 1));
    CHECK(BigInt(spanning_subgraphs(g, 2).size()) == binomial(n - 1, 2));
    for (int i = 0; i <= n - 1; ++i)
      for (const auto& f : spanning_subgraphs(g, i))
        CHECK(f.partition_type() == join(Partition({i + 1}), repeated(1, n - i - 1)));
  }
  const auto empty = spanning_subgraphs(star(5), 0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].components().size() == 5);
  CHECK(empty[0].partition_type() == repeated(1, 5));
}

TEST_CASE("the 8-vertex example subgraph") {
  const std::vector<Edge> edges{{3, 7}, {7, 8}, {4, 5}, {5, 6}, {1, 2}};
  const Graph g(8, edges);
  const SpanningSubgraph f(g, edges);
  CHECK(f.partition_type() == Partition({3, 3, 2}));
  CHECK(f.canonical_tableau().rows() == std::vector<std::vector<int>>{{3, 7, 8}, {4, 5, 6}, {1, 2}});
  CHECK(f.component_of(8) == 0);
  CHECK(f.component_of(2) == 2);
}

TEST_CASE("canonical tableau ordering rule") {
  const Graph three(3, {{1, 2}});
  CHECK(SpanningSubgraph(three, {}).canonical_tableau().rows() ==
        std::vector<std::vector<int>>{{1}, {2}, {3}});
  CHECK(SpanningSubgraph(star(4), {{1, 3}}).canonical_tableau().rows() ==
        std::vector<std::vector<int>>{{1, 3}, {2}, {4}});
  const SpanningSubgraph f(star(4), {{1, 2}, {1, 3}});
  CHECK(f.without({1, 3}).partition_type() == Partition({2, 1, 1}));
  CHECK(f.contains({1, 2}));
  CHECK_FALSE(f.contains({1, 4}));
  CHECK_THROWS(SpanningSubgraph(star(4), {{2, 3}}));
}

TEST_CASE("partition-type multisets are invariant under relabeling") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testutil::random_graph(rng, 6);
    const auto sigma = testutil::random_permutation(rng, g.vertex_count());
    const Graph h = g.relabeled(sigma.images());
    CHECK(h.edge_count() == g.edge_count());
    for (int i = 0; i <= g.edge_count(); ++i) CHECK(type_counts(g, i) == type_counts(h, i));
  }
}

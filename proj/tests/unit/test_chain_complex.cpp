#include <doctest.h>

#include <random>

#include "chromhom/chain_complex.hpp"
#include "random_graphs.hpp"

using namespace chromhom;

TEST_CASE("sparse matrix arithmetic") {
  const auto a = SparseMatrix::from_triplets(2, 3, {{0, 0, 1}, {1, 2, 4}, {0, 0, 2}, {1, 1, 0}});
  CHECK(a.nnz() == 2);
  CHECK(a.at(0, 0) == 3);
  CHECK(a.at(1, 1) == 0);
  const std::vector<std::int64_t> x{1, 1, 1};
  CHECK(a.apply(x) == std::vector<std::int64_t>{3, 4});
  CHECK(SparseMatrix::identity(2) * a == a);
  CHECK((a - a).is_zero());
  CHECK(a.to_dense() == std::vector<std::vector<std::int64_t>>{{3, 0, 0}, {0, 0, 4}});
  CHECK_THROWS(a * a);
}

TEST_CASE("split block of star(4), F = {12,13}, e = 13") {
  const SpanningSubgraph f(star(4), {{1, 2}, {1, 3}});
  const SparseMatrix block = differential_block(f, {1, 3});
  CHECK(block.cols() == 4);
  CHECK(block.rows() == 12);
  const auto from = tabloid_basis_for(Partition({3, 1}));
  const auto to = tabloid_basis_for(Partition({2, 1, 1}));
  for (std::size_t c = 0; c < block.cols(); ++c) {
    const auto col = block.column(c);
    REQUIRE(col.size() == 3);
    const Tabloid source = from->tabloid(c);
    for (const auto& entry : col) {
      CHECK(entry.value == 1);
      const Tabloid target = to->tabloid(entry.row);
      // the singleton row of F stays a singleton; the 3-block splits into 2 + 1
      CHECK(target.blocks()[2] == source.blocks()[1]);
    }
  }
}

TEST_CASE("no-split block is the identity") {
  const Graph triangle(3, {{1, 2}, {1, 3}, {2, 3}});
  const SpanningSubgraph f(triangle, triangle.edges());
  const SparseMatrix block = differential_block(f, {2, 3});
  CHECK(block == SparseMatrix::identity(1));
  const Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  const SpanningSubgraph g(c4, c4.edges());
  CHECK(differential_block(g, {1, 4}) == SparseMatrix::identity(1));
  CHECK_THROWS(differential_block(SpanningSubgraph(c4, {{1, 2}}), {2, 3}));
}

TEST_CASE("layer dimensions") {
  const ChainComplex cc(star(4));
  CHECK(cc.layer(0).dimension == 24);
  CHECK(cc.layer(1).dimension == 36);
  CHECK(cc.layer(1).summands.size() == 3);
  const SparseMatrix d1 = boundary_matrix(star(4), 1);
  CHECK(d1.rows() == 24);
  CHECK(d1.cols() == 36);
  CHECK(cc.boundary(0).cols() == 24);
  CHECK(cc.boundary(0).is_zero());
  CHECK(cc.boundary(4).rows() == cc.layer(3).dimension);
}

TEST_CASE("d o d = 0 on stars n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    const ChainComplex cc(star(n));
    for (int i = 2; i <= cc.top_index(); ++i) CHECK((cc.boundary(i - 1) * cc.boundary(i)).is_zero());
  }
}

TEST_CASE("d o d = 0 on 25 random graphs with n <= 5") {
  std::mt19937 rng(2024);
  for (int t = 0; t < 25; ++t) {
    const Graph g = testutil::random_graph(rng, 5);
    const ChainComplex cc(g);
    for (int i = 2; i <= cc.top_index(); ++i) CHECK((cc.boundary(i - 1) * cc.boundary(i)).is_zero());
  }
}

TEST_CASE("d o d = 0 under a reversed edge order") {
  std::mt19937 rng(99);
  for (int t = 0; t < 10; ++t) {
    const Graph g = testutil::random_graph(rng, 5);
    const ChainComplex cc(g, std::vector<Edge>(g.edges().rbegin(), g.edges().rend()));
    for (int i = 2; i <= cc.top_index(); ++i) CHECK((cc.boundary(i - 1) * cc.boundary(i)).is_zero());
  }
}

TEST_CASE("boundaries commute with the group action") {
  std::mt19937 rng(7);
  std::vector<Graph> graphs{star(4), star(5), Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})};
  for (int t = 0; t < 5; ++t) graphs.push_back(testutil::random_graph(rng, 5));
  for (const auto& g : graphs) {
    const ChainComplex cc(g);
    for (int s = 0; s < 20; ++s) {
      const auto sigma = testutil::random_permutation(rng, g.vertex_count());
      for (int i = 1; i <= cc.top_index(); ++i)
        CHECK(cc.action_matrix(i - 1, sigma) * cc.boundary(i) == cc.boundary(i) * cc.action_matrix(i, sigma));
    }
  }
}

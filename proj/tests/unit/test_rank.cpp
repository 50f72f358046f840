#include <doctest.h>

#include <random>

#include "chromhom/chain_complex.hpp"
#include "chromhom/rank.hpp"
#include "random_graphs.hpp"

using namespace chromhom;

TEST_CASE("primes") {
  CHECK(is_prime(2));
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(2147483649ULL));
  const auto [p, q] = choose_primes(1);
  CHECK(is_prime(p));
  CHECK(is_prime(q));
  CHECK(p != q);
  CHECK(p >= (1u << 31) - (1u << 24));
  CHECK(choose_primes(1) == choose_primes(1));
  CHECK(choose_primes(1) != choose_primes(2));
}

TEST_CASE("rank modes parse") {
  CHECK(parse_rank_mode("exact") == RankMode::exact);
  CHECK(parse_rank_mode("modular") == RankMode::modular);
  CHECK(parse_rank_mode("auto") == RankMode::automatic);
  CHECK_THROWS(parse_rank_mode("fast"));
  CHECK(to_string(RankMode::automatic) == "auto");
}

TEST_CASE("small exact ranks") {
  const std::vector<std::vector<std::int64_t>> m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank_exact(m) == 2);
  CHECK(rank_mod_p(m, 2147483647) == 2);
  CHECK(rank_mod_p(std::vector<std::vector<std::int64_t>>{{3, 0}, {0, 3}}, 3) == 0);
  CHECK(rank_exact(std::vector<std::vector<std::int64_t>>{}) == 0);
  ModPEchelon ech(3, 101);
  CHECK(ech.insert(std::vector<std::int64_t>{1, 2, 3}));
  CHECK_FALSE(ech.insert(std::vector<std::int64_t>{-2, -4, -6}));
  CHECK(ech.insert(std::vector<std::int64_t>{0, 0, 5}));
  CHECK(ech.rank() == 2);
}

TEST_CASE("modular rank equals exact rank on random matrices") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> dim(1, 12);
  std::uniform_int_distribution<int> val(-3, 3);
  const auto primes = choose_primes(1);
  for (int t = 0; t < 200; ++t) {
    const int r = dim(rng), c = dim(rng), k = dim(rng);
    // low-rank product to make rank deficiency common
    std::vector<std::vector<std::int64_t>> a(r, std::vector<std::int64_t>(k)), b(k, std::vector<std::int64_t>(c));
    for (auto& row : a)
      for (auto& x : row) x = val(rng);
    for (auto& row : b)
      for (auto& x : row) x = val(rng);
    std::vector<std::vector<std::int64_t>> m(r, std::vector<std::int64_t>(c, 0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        for (int l = 0; l < k; ++l) m[i][j] += a[i][l] * b[l][j];
    CHECK(rank_mod_p(m, primes.first) == rank_exact(m));
  }
}

TEST_CASE("modular rank equals exact rank on boundary matrices for n <= 5") {
  std::mt19937 rng(8);
  std::vector<Graph> graphs{star(4), star(5)};
  for (int t = 0; t < 8; ++t) graphs.push_back(testutil::random_graph(rng, 5));
  for (const auto& g : graphs) {
    const ChainComplex cc(g);
    for (int i = 1; i <= cc.top_index(); ++i) {
      const auto dense = cc.boundary(i).to_dense();
      RankEngine modular(RankMode::modular, 3);
      RankEngine exact(RankMode::exact);
      CHECK(modular.rank(dense, cc.boundary(i).cols()) == exact.rank(dense, cc.boundary(i).cols()));
      CHECK(modular.stats().prime_disagreements == 0);
    }
  }
}

TEST_CASE("automatic mode picks a backend by size") {
  RankEngine engine(RankMode::automatic, 1, 4);
  const std::vector<std::vector<std::int64_t>> small{{1, 0}, {0, 1}};
  CHECK(engine.rank(small, 2) == 2);
  CHECK(engine.stats().exact_runs == 1);
  const std::vector<std::vector<std::int64_t>> wide{{1, 0, 0, 0, 0, 1}};
  CHECK(engine.rank(wide, 6) == 1);
  CHECK(engine.stats().modular_runs == 1);
}

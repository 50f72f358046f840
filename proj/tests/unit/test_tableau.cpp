#include <doctest.h>

#include <algorithm>

#include "chromhom/tableau.hpp"

using namespace chromhom;

TEST_CASE("hook lengths from the worked diagrams") {
  CHECK(hook_lengths(Partition({3, 2})).rows() == std::vector<std::vector<int>>{{4, 3, 1}, {2, 1}});
  CHECK(hook_lengths(Partition({3, 2, 2})).rows() ==
        std::vector<std::vector<int>>{{5, 4, 1}, {3, 2}, {2, 1}});
  CHECK(hook_lengths(Partition({1})).rows() == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("f_syt values") {
  CHECK(f_syt(Partition({3, 2})) == 5);
  CHECK(f_syt(Partition({3, 2, 2})) == 21);
  CHECK(f_syt(Partition({2, 2})) == 2);
  CHECK(f_syt(repeated(1, 6)) == 1);
  CHECK(f_syt(Partition({6})) == 1);
  CHECK(f_syt(Partition()) == 1);
}

TEST_CASE("the five SYT of shape 32") {
  const auto syt = enumerate_syt(Partition({3, 2}));
  std::vector<std::string> got;
  for (const auto& t : syt) got.push_back(t.to_string());
  CHECK(got == std::vector<std::string>{"123/45", "124/35", "125/34", "134/25", "135/24"});
  for (const auto& t : syt) CHECK(t.is_syt());
}

TEST_CASE("the two SYT of shape 2^2") {
  const auto syt = enumerate_syt(Partition({2, 2}));
  REQUIRE(syt.size() == 2);
  CHECK(syt[0].rows() == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  CHECK(syt[1].rows() == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
}

TEST_CASE("SSYT of shape 431 and content 332") {
  const auto ssyt = enumerate_ssyt(Partition({4, 3, 1}), Partition({3, 3, 2}));
  REQUIRE(ssyt.size() == 2);
  CHECK(ssyt[0].rows() == std::vector<std::vector<int>>{{1, 1, 1, 2}, {2, 2, 3}, {3}});
  CHECK(ssyt[1].rows() == std::vector<std::vector<int>>{{1, 1, 1, 3}, {2, 2, 2}, {3}});
  CHECK(kostka(Partition({4, 3, 1}), Partition({3, 3, 2})) == 2);
  for (const auto& t : ssyt) {
    CHECK(t.is_ssyt());
    CHECK(t.content() == std::vector<int>{3, 3, 2});
  }
}

TEST_CASE("superstandard filling and forced top row") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : partitions_of(n)) CHECK(enumerate_ssyt(p, p).size() == 1);
  for (int n = 4; n <= 8; ++n) {
    const Partition shape = join(repeated(2, 2), repeated(1, n - 4));
    const Partition content = join(Partition({2}), repeated(1, n - 2));
    CHECK(BigInt(enumerate_ssyt(shape, content).size()) == f_syt(join(Partition({2}), repeated(1, n - 4))));
  }
}

TEST_CASE("kostka invariants for n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& lambda : ps) {
      CHECK(kostka(lambda, repeated(1, n)) == f_syt(lambda));
      CHECK(kostka(lambda, lambda) == 1);
      for (const auto& mu : ps) CHECK((kostka(lambda, mu) > 0) == lambda.dominates(mu));
    }
  }
  CHECK(kostka(repeated(1, 4), Partition({2, 2})) == 0);
}

TEST_CASE("SSYT are sorted by reading word and distinct") {
  const auto ssyt = enumerate_ssyt(Partition({3, 2, 1}), Partition({2, 2, 1, 1}));
  CHECK(BigInt(ssyt.size()) == kostka(Partition({3, 2, 1}), Partition({2, 2, 1, 1})));
  for (std::size_t i = 1; i < ssyt.size(); ++i) CHECK(ssyt[i - 1].reading_word() < ssyt[i].reading_word());
}

TEST_CASE("f_syt matches enumeration for n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    BigInt sum = 0;
    for (const auto& p : partitions_of(n)) {
      CHECK(BigInt(enumerate_syt(p).size()) == f_syt(p));
      sum += f_syt(p) * f_syt(p);
    }
    CHECK(sum == factorial(n));
  }
}

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "chromhom/graph.hpp"
#include "chromhom/symmetric_group.hpp"

namespace testutil {

// Random simple graph on 2..max_n vertices with at least one edge.
inline chromhom::Graph random_graph(std::mt19937& rng, int max_n) {
  std::uniform_int_distribution<int> size(2, max_n);
  const int n = size(rng);
  std::vector<chromhom::Edge> all;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<std::size_t> count(1, std::min<std::size_t>(all.size(), 6));
  all.resize(count(rng));
  return chromhom::Graph(n, all);
}

inline chromhom::Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return chromhom::Permutation(images);
}

}  // namespace testutil

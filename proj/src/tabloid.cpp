#include "chromhom/tabloid.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace chromhom {

namespace {

std::uint64_t pack(const std::vector<std::vector<int>>& blocks) {
  std::uint64_t key = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int v : blocks[b]) key |= static_cast<std::uint64_t>(b) << (4 * (v - 1));
  return key;
}

}  // namespace

Tabloid::Tabloid(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) {
    std::sort(b.begin(), b.end());
    n_ += static_cast<int>(b.size());
  }
  if (n_ > kMaxTabloidVertices || blocks_.size() > 16)
    throw std::invalid_argument("tabloid too large for packed encoding");
  std::vector<bool> seen(static_cast<std::size_t>(n_ + 1), false);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw std::invalid_argument("tabloid block is empty");
    if (b > 0 && blocks_[b].size() > blocks_[b - 1].size())
      throw std::invalid_argument("tabloid block sizes must be weakly decreasing");
    for (int v : blocks_[b]) {
      if (v < 1 || v > n_ || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("tabloid blocks must partition {1..n}");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  key_ = pack(blocks_);
}

Partition Tabloid::shape() const {
  std::vector<int> sizes;
  for (const auto& b : blocks_) sizes.push_back(static_cast<int>(b.size()));
  return Partition(std::move(sizes));
}

int Tabloid::block_of(int v) const { return static_cast<int>((key_ >> (4 * (v - 1))) & 0xF); }

Tabloid permutation_action(const Permutation& sigma, const Tabloid& t) {
  if (sigma.degree() != t.vertex_count()) throw std::invalid_argument("degree mismatch");
  auto blocks = t.blocks();
  for (auto& b : blocks)
    for (int& v : b) v = sigma(v);
  return Tabloid(std::move(blocks));
}

std::uint64_t act_on_key(const Permutation& sigma, std::uint64_t key) {
  std::uint64_t out = 0;
  const auto& img = sigma.images();
  for (std::size_t v = 0; v < img.size(); ++v, key >>= 4)
    out |= (key & 0xF) << (4 * (img[v] - 1));
  return out;
}

namespace {

// Fills block `b` with each size-k subset of the free vertices in
// lexicographic order, recursing to the next block.
void enumerate_tabloids(const Partition& shape, std::size_t b, std::vector<bool>& used,
                        std::vector<std::vector<int>>& blocks, std::vector<std::uint64_t>& out) {
  if (b == blocks.size()) {
    out.push_back(pack(blocks));
    return;
  }
  const int n = shape.size();
  const int k = shape.part(static_cast<int>(b));
  std::vector<int> free;
  for (int v = 1; v <= n; ++v)
    if (!used[static_cast<std::size_t>(v)]) free.push_back(v);
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  const int m = static_cast<int>(free.size());
  while (true) {
    auto& block = blocks[b];
    block.clear();
    for (int p : pick) {
      block.push_back(free[static_cast<std::size_t>(p)]);
      used[static_cast<std::size_t>(block.back())] = true;
    }
    enumerate_tabloids(shape, b + 1, used, blocks, out);
    for (int v : block) used[static_cast<std::size_t>(v)] = false;
    int j = k - 1;
    while (j >= 0 && pick[static_cast<std::size_t>(j)] == m - k + j) --j;
    if (j < 0) break;
    ++pick[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < k; ++t) pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
  }
}

}  // namespace

TabloidBasis::TabloidBasis(Partition shape) : shape_(std::move(shape)) {
  if (shape_.size() > kMaxTabloidVertices)
    throw std::invalid_argument("tabloid basis limited to 16 vertices");
  std::vector<bool> used(static_cast<std::size_t>(shape_.size() + 1), false);
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(shape_.length()));
  enumerate_tabloids(shape_, 0, used, blocks, keys_);
  index_.reserve(keys_.size());
  for (std::size_t i = 0; i < keys_.size(); ++i) index_.emplace(keys_[i], static_cast<std::uint32_t>(i));
}

Tabloid TabloidBasis::tabloid(std::size_t index) const {
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(shape_.length()));
  std::uint64_t key = keys_.at(index);
  for (int v = 1; v <= shape_.size(); ++v, key >>= 4) blocks[key & 0xF].push_back(v);
  return Tabloid(std::move(blocks));
}

std::vector<Tabloid> TabloidBasis::tabloids() const {
  std::vector<Tabloid> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(tabloid(i));
  return out;
}

std::size_t TabloidBasis::index_of(std::uint64_t key) const {
  auto it = index_.find(key);
  if (it == index_.end()) throw std::out_of_range("tabloid is not in this basis");
  return it->second;
}

std::shared_ptr<const TabloidBasis> tabloid_basis_for(const Partition& shape) {
  static std::mutex mutex;
  static std::map<Partition, std::shared_ptr<const TabloidBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[shape];
  if (!slot) slot = std::make_shared<const TabloidBasis>(shape);
  return slot;
}

std::vector<Tabloid> tabloid_basis(const SpanningSubgraph& f) {
  return tabloid_basis_for(f.partition_type())->tabloids();
}

}  // namespace chromhom

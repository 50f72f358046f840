#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "chromhom/graph.hpp"
#include "chromhom/partition.hpp"
#include "chromhom/symmetric_group.hpp"

namespace chromhom {

/// Upper bound on n for the packed tabloid encoding (4 bits per vertex).
inline constexpr int kMaxTabloidVertices = 16;

/// An ordered set partition of {1..n} with weakly decreasing block sizes.
///
/// Blocks are positional: two tabloids with the same blocks in different
/// positions are different. Elements within a block are kept sorted.
class Tabloid {
 public:
  /// Throws std::invalid_argument unless the blocks partition {1..n} and
  /// their sizes are weakly decreasing.
  explicit Tabloid(std::vector<std::vector<int>> blocks);

  int vertex_count() const noexcept { return n_; }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  Partition shape() const;
  int block_of(int v) const;

  /// Block index of each vertex packed into 4-bit fields, vertex 1 lowest.
  std::uint64_t key() const noexcept { return key_; }

  friend bool operator==(const Tabloid& a, const Tabloid& b) { return a.key_ == b.key_ && a.n_ == b.n_; }
  friend auto operator<=>(const Tabloid& a, const Tabloid& b) { return a.blocks_ <=> b.blocks_; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::uint64_t key_ = 0;
};

/// Block j of the result is sigma applied to block j of t.
Tabloid permutation_action(const Permutation& sigma, const Tabloid& t);

/// Packed-key form of permutation_action.
std::uint64_t act_on_key(const Permutation& sigma, std::uint64_t key);

/// The tabloids of one shape, lexicographically ordered on their sequence of
/// sorted blocks, with constant-time lookup by packed key.
class TabloidBasis {
 public:
  explicit TabloidBasis(Partition shape);

  const Partition& shape() const noexcept { return shape_; }
  int vertex_count() const noexcept { return shape_.size(); }
  std::size_t size() const noexcept { return keys_.size(); }

  std::uint64_t key(std::size_t index) const { return keys_[index]; }
  Tabloid tabloid(std::size_t index) const;
  std::vector<Tabloid> tabloids() const;

  /// Throws std::out_of_range for a key of another shape.
  std::size_t index_of(std::uint64_t key) const;
  std::size_t index_of(const Tabloid& t) const { return index_of(t.key()); }

  /// Index of sigma applied to the tabloid at `index`.
  std::size_t act(const Permutation& sigma, std::size_t index) const {
    return index_of(act_on_key(sigma, keys_[index]));
  }

 private:
  Partition shape_;
  std::vector<std::uint64_t> keys_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

/// Shared, process-wide cache of bases keyed by shape.
std::shared_ptr<const TabloidBasis> tabloid_basis_for(const Partition& shape);

/// Tabloids of shape partition_type(F): the coset basis of the permutation
/// module attached to F, with block j aligned to row j of its canonical tableau.
std::vector<Tabloid> tabloid_basis(const SpanningSubgraph& f);

}  // namespace chromhom

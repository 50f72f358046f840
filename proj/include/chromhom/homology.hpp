#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chromhom/bigint.hpp"
#include "chromhom/chain_complex.hpp"
#include "chromhom/graph.hpp"
#include "chromhom/isotypic.hpp"
#include "chromhom/partition.hpp"
#include "chromhom/rank.hpp"

namespace chromhom {

/// Specht-module multiplicities of a representation of the symmetric group
/// on n letters. Only nonzero entries are stored.
class MultiplicityTable {
 public:
  explicit MultiplicityTable(int n = 0) : n_(n) {}

  int degree() const noexcept { return n_; }

  /// Throws std::invalid_argument for a negative value or a partition of the
  /// wrong size. Setting zero removes the entry.
  void set(const Partition& lambda, const BigInt& multiplicity);
  BigInt get(const Partition& lambda) const;

  /// Reverse-lexicographic order.
  const std::map<Partition, BigInt, std::greater<>>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// One line per nonzero entry: "3,2": 1
  std::string to_text() const;

  friend bool operator==(const MultiplicityTable&, const MultiplicityTable&) = default;

 private:
  int n_;
  std::map<Partition, BigInt, std::greater<>> entries_;
};

inline constexpr int kDefaultHomologyVertexLimit = 6;
inline constexpr int kLargeHomologyVertexLimit = 7;

struct HomologyOptions {
  RankMode rank_mode = RankMode::automatic;
  /// Permits n = 7, modular ranks only.
  bool allow_large = false;
  /// Replaces the default vertex limit when set.
  std::optional<int> vertex_limit;
  std::uint64_t seed = 1;
  std::size_t exact_dimension_limit = kDefaultExactDimensionLimit;
  /// Global edge order for the differential signs; empty means lexicographic.
  std::vector<Edge> edge_order;
};

/// Per-shape bookkeeping behind one homology table.
struct IsotypicRow {
  Partition lambda;
  BigInt chain_multiplicity;
  std::size_t rank_outgoing = 0;  // multiplicity of lambda in im d_i
  std::size_t rank_incoming = 0;  // multiplicity of lambda in im d_{i+1}
  BigInt multiplicity;
};

struct HomologyResult {
  int index = 0;
  MultiplicityTable table;
  std::vector<IsotypicRow> rows;
  std::size_t dim_previous = 0;  // dim C_{i-1}, 0 when i = 0
  std::size_t dim_current = 0;
  std::size_t dim_next = 0;      // dim C_{i+1}, 0 when i = |E|
  RankMode rank_mode = RankMode::automatic;
  std::pair<std::uint32_t, std::uint32_t> primes;
  RankEngine::Stats rank_stats;
};

/// Sum over i-edge spanning subgraphs F of K_{lambda, partition_type(F)}.
BigInt chain_multiplicity(const Graph& g, int i, const Partition& lambda);

/// Checks the vertex budget and the rank-mode restriction for large inputs.
/// Throws SizeLimitError.
void check_homology_budget(const Graph& g, const HomologyOptions& options);

/// Homology of one graph's degree-0 complex, with every isotypic rank cached
/// so that neighbouring indices share work.
class HomologyEngine {
 public:
  HomologyEngine(const Graph& g, const HomologyOptions& options = {});

  const ChainComplex& complex() const noexcept { return complex_; }
  RankEngine& rank_engine() noexcept { return engine_; }
  const IsotypicProjector& projector() const noexcept { return projector_; }

  /// Multiplicity of lambda in the image of d_i, 0 <= i <= |E| + 1.
  std::size_t boundary_rank(int i, const Partition& lambda);

  /// H_{i,0}: chain multiplicity minus the isotypic ranks of d_i and d_{i+1}.
  /// Throws InternalError on a negative result.
  HomologyResult homology(int i);

 private:
  ChainComplex complex_;
  IsotypicProjector projector_;
  RankEngine engine_;
  std::map<std::pair<int, Partition>, std::size_t> rank_cache_;
};

HomologyResult homology_multiplicities(const Graph& g, int i, const HomologyOptions& options = {});

}  // namespace chromhom

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "chromhom/graph.hpp"
#include "chromhom/sparse_matrix.hpp"
#include "chromhom/symmetric_group.hpp"
#include "chromhom/tabloid.hpp"

namespace chromhom {

/// One direct summand of a chain group: the permutation module of a spanning
/// subgraph, occupying coordinates [offset, offset + basis->size()).
struct ChainSummand {
  SpanningSubgraph subgraph;
  std::shared_ptr<const TabloidBasis> basis;
  std::size_t offset = 0;
};

/// The degree-0 part of C_i(G) in its tabloid basis.
struct ChainLayer {
  int index = 0;
  std::vector<ChainSummand> summands;
  std::size_t dimension = 0;

  /// Position in `summands` of the subgraph with exactly these edges (any order).
  std::size_t summand_of(std::vector<Edge> edges) const;

 private:
  friend class ChainComplex;
  std::map<std::vector<Edge>, std::size_t> lookup_;
};

/// Matrix of the inclusion M_F -> M_{F minus e} in tabloid bases (columns
/// indexed by F, rows by F minus e). Throws std::invalid_argument if e is not in F.
///
/// When e lies on a cycle of F the components do not change and the block is
/// the identity. When e splits a component B into B1 and B2, a tabloid whose
/// block at B's row is X maps to the sum over |B1|-subsets Y of X of the
/// tabloid carrying Y in B1's row, X minus Y in B2's row, and every other
/// block moved to its row in the canonical tableau of F minus e.
SparseMatrix differential_block(const SpanningSubgraph& f, Edge e);

/// The chain complex of degree-0 permutation modules for one graph and one
/// global edge order. Layers and boundary maps are built on first use and
/// cached; the object is safe to share between threads.
class ChainComplex {
 public:
  explicit ChainComplex(Graph g);
  /// `edge_order` must be a permutation of g.edges().
  ChainComplex(Graph g, std::vector<Edge> edge_order);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<Edge>& edge_order() const noexcept { return order_; }
  int top_index() const noexcept { return graph_.edge_count(); }

  /// 0 <= i <= |E|.
  const ChainLayer& layer(int i) const;

  /// d_i : C_i -> C_{i-1} for 0 <= i <= |E| + 1; d_0 and d_{|E|+1} are zero
  /// maps with zero rows, respectively zero columns.
  const SparseMatrix& boundary(int i) const;

  /// Matrix of sigma acting on C_i.
  SparseMatrix action_matrix(int i, const Permutation& sigma) const;

 private:
  ChainLayer build_layer(int i) const;
  SparseMatrix build_boundary(int i) const;

  Graph graph_;
  std::vector<Edge> order_;
  std::map<Edge, int> position_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<ChainLayer>> layers_;
  mutable std::vector<std::unique_ptr<SparseMatrix>> boundaries_;
};

/// d_i for the lexicographic edge order.
SparseMatrix boundary_matrix(const Graph& g, int i);

}  // namespace chromhom

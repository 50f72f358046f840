#pragma once

#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chromhom/partition.hpp"
#include "chromhom/tableau.hpp"

namespace chromhom {

/// Unordered edge stored as (u, v) with u < v, vertices 1-based.
using Edge = std::pair<int, int>;

/// Simple labeled graph on vertices 1..n. Edges are kept sorted
/// lexicographically, which is also the default global edge order.
class Graph {
 public:
  Graph() = default;
  /// Edges may be given as (u, v) or (v, u). Throws std::invalid_argument on
  /// loops, duplicates, or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_edge(Edge e) const;

  /// The graph with vertex v renamed to perm(v).
  Graph relabeled(std::span<const int> perm) const;

  /// "n <count>" followed by one "u v" line per edge.
  std::string to_text() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Vertex 1 joined to each of 2..n. Throws std::invalid_argument for n < 2.
Graph star(int n);

/// Reads "n <count>" then "u v" lines; '#' starts a comment. Throws
/// ParseError carrying the 1-based line number.
Graph parse_graph(std::istream& in);
Graph load_graph(const std::string& path);

/// An edge subset of a graph together with its connected components.
///
/// Components are stored in canonical order: decreasing size, ties broken by
/// increasing smallest vertex; each component is sorted. That order is both
/// the partition type and the row order of the canonical tableau.
class SpanningSubgraph {
 public:
  /// Throws std::invalid_argument if some edge is not in `parent`.
  SpanningSubgraph(const Graph& parent, std::vector<Edge> edge_subset);

  int vertex_count() const noexcept { return n_; }
  /// In the order given at construction.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool contains(Edge e) const;

  const std::vector<std::vector<int>>& components() const noexcept { return components_; }
  /// components()-index of the component holding vertex v.
  int component_of(int v) const { return component_of_[static_cast<std::size_t>(v - 1)]; }

  /// Component sizes in decreasing order.
  const Partition& partition_type() const noexcept { return type_; }

  /// Row i is the i-th canonical component.
  Tableau canonical_tableau() const;

  /// The subgraph with `e` removed (same parent vertex set).
  SpanningSubgraph without(Edge e) const;

 private:
  SpanningSubgraph(int n, std::vector<Edge> edges);
  void compute_components();

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> components_;
  std::vector<int> component_of_;
  Partition type_;
};

/// All C(|E|, i) subsets of size i, as combinations of positions in
/// `edge_order` taken in lexicographic order. Each subgraph lists its edges
/// in `edge_order` order.
std::vector<SpanningSubgraph> spanning_subgraphs(const Graph& g, int i,
                                                 const std::vector<Edge>& edge_order);
std::vector<SpanningSubgraph> spanning_subgraphs(const Graph& g, int i);

}  // namespace chromhom

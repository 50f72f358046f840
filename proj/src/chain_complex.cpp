#include "chromhom/chain_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace chromhom {

std::size_t ChainLayer::summand_of(std::vector<Edge> edges) const {
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  auto it = lookup_.find(edges);
  if (it == lookup_.end()) throw std::out_of_range("no summand with these edges");
  return it->second;
}

SparseMatrix differential_block(const SpanningSubgraph& f, Edge e) {
  if (!f.contains(e)) throw std::invalid_argument("differential_block: edge not in subgraph");
  const SpanningSubgraph fp = f.without(e);
  const auto from = tabloid_basis_for(f.partition_type());
  const auto to = tabloid_basis_for(fp.partition_type());

  std::vector<SparseMatrix::Triplet> triplets;
  if (fp.components().size() == f.components().size()) {
    for (std::size_t c = 0; c < from->size(); ++c) triplets.push_back({c, c, 1});
    return SparseMatrix::from_triplets(to->size(), from->size(), std::move(triplets));
  }

  const int split_row = f.component_of(e.first);
  const auto row1 = static_cast<std::uint64_t>(fp.component_of(e.first));
  const auto row2 = static_cast<std::uint64_t>(fp.component_of(e.second));
  const int size1 = static_cast<int>(fp.components()[row1].size());

  // Row of F minus e that each unsplit row of F moves to.
  std::vector<std::uint64_t> moved(f.components().size(), 0);
  for (std::size_t r = 0; r < f.components().size(); ++r)
    if (static_cast<int>(r) != split_row)
      moved[r] = static_cast<std::uint64_t>(fp.component_of(f.components()[r].front()));

  const int n = f.vertex_count();
  std::vector<int> block;
  std::vector<int> pick;
  for (std::size_t c = 0; c < from->size(); ++c) {
    const std::uint64_t key = from->key(c);
    std::uint64_t base = 0;
    block.clear();
    for (int v = 1; v <= n; ++v) {
      const auto label = (key >> (4 * (v - 1))) & 0xF;
      if (static_cast<int>(label) == split_row)
        block.push_back(v);
      else
        base |= moved[label] << (4 * (v - 1));
    }
    const int m = static_cast<int>(block.size());
    pick.resize(static_cast<std::size_t>(size1));
    for (int i = 0; i < size1; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::uint64_t out = base;
      std::size_t next = 0;
      for (int i = 0; i < m; ++i) {
        const bool chosen = next < pick.size() && pick[next] == i;
        if (chosen) ++next;
        out |= (chosen ? row1 : row2) << (4 * (block[static_cast<std::size_t>(i)] - 1));
      }
      triplets.push_back({to->index_of(out), c, 1});
      int j = size1 - 1;
      while (j >= 0 && pick[static_cast<std::size_t>(j)] == m - size1 + j) --j;
      if (j < 0) break;
      ++pick[static_cast<std::size_t>(j)];
      for (int t = j + 1; t < size1; ++t)
        pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  return SparseMatrix::from_triplets(to->size(), from->size(), std::move(triplets));
}

ChainComplex::ChainComplex(Graph g) : ChainComplex(g, g.edges()) {}

ChainComplex::ChainComplex(Graph g, std::vector<Edge> edge_order)
    : graph_(std::move(g)), order_(std::move(edge_order)) {
  for (auto& e : order_)
    if (e.first > e.second) std::swap(e.first, e.second);
  auto sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != graph_.edges())
    throw std::invalid_argument("edge order must be a permutation of the graph's edges");
  for (std::size_t i = 0; i < order_.size(); ++i) position_.emplace(order_[i], static_cast<int>(i));
  layers_.resize(static_cast<std::size_t>(top_index() + 1));
  boundaries_.resize(static_cast<std::size_t>(top_index() + 2));
}

const ChainLayer& ChainComplex::layer(int i) const {
  if (i < 0 || i > top_index()) throw std::out_of_range("chain layer index out of range");
  std::lock_guard lock(mutex_);
  auto& slot = layers_[static_cast<std::size_t>(i)];
  if (!slot) slot = std::make_unique<ChainLayer>(build_layer(i));
  return *slot;
}

ChainLayer ChainComplex::build_layer(int i) const {
  ChainLayer out;
  out.index = i;
  for (auto& f : spanning_subgraphs(graph_, i, order_)) {
    auto basis = tabloid_basis_for(f.partition_type());
    auto key = f.edges();
    std::sort(key.begin(), key.end());
    out.lookup_.emplace(std::move(key), out.summands.size());
    out.summands.push_back(ChainSummand{std::move(f), basis, out.dimension});
    out.dimension += basis->size();
  }
  return out;
}

const SparseMatrix& ChainComplex::boundary(int i) const {
  if (i < 0 || i > top_index() + 1) throw std::out_of_range("boundary index out of range");
  const ChainLayer* domain = i <= top_index() ? &layer(i) : nullptr;
  const ChainLayer* codomain = i >= 1 ? &layer(i - 1) : nullptr;
  std::lock_guard lock(mutex_);
  auto& slot = boundaries_[static_cast<std::size_t>(i)];
  if (!slot) {
    if (!domain || !codomain) {
      slot = std::make_unique<SparseMatrix>(codomain ? codomain->dimension : 0,
                                            domain ? domain->dimension : 0);
    } else {
      std::vector<SparseMatrix::Triplet> triplets;
      for (const auto& s : domain->summands) {
        const auto& edges = s.subgraph.edges();
        for (const auto& e : edges) {
          const int pos = position_.at(e);
          const auto after = std::count_if(edges.begin(), edges.end(),
                                           [&](const Edge& x) { return position_.at(x) > pos; });
          const std::int64_t sign = after % 2 == 0 ? 1 : -1;
          std::vector<Edge> rest;
          for (const auto& x : edges)
            if (x != e) rest.push_back(x);
          const auto& target = codomain->summands[codomain->summand_of(rest)];
          const SparseMatrix block = differential_block(s.subgraph, e);
          for (std::size_t c = 0; c < block.cols(); ++c)
            for (const auto& entry : block.column(c))
              triplets.push_back({target.offset + entry.row, s.offset + c, sign * entry.value});
        }
      }
      slot = std::make_unique<SparseMatrix>(
          SparseMatrix::from_triplets(codomain->dimension, domain->dimension, std::move(triplets)));
    }
  }
  return *slot;
}

SparseMatrix ChainComplex::action_matrix(int i, const Permutation& sigma) const {
  const ChainLayer& l = layer(i);
  std::vector<SparseMatrix::Triplet> triplets;
  triplets.reserve(l.dimension);
  for (const auto& s : l.summands)
    for (std::size_t c = 0; c < s.basis->size(); ++c)
      triplets.push_back({s.offset + s.basis->act(sigma, c), s.offset + c, 1});
  return SparseMatrix::from_triplets(l.dimension, l.dimension, std::move(triplets));
}

SparseMatrix boundary_matrix(const Graph& g, int i) {
  if (i < 1 || i > g.edge_count()) throw std::out_of_range("boundary_matrix: index out of range");
  return ChainComplex(g).boundary(i);
}

}  // namespace chromhom

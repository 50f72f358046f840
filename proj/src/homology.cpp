#include "chromhom/homology.hpp"

#include <sstream>
#include <stdexcept>

#include "chromhom/errors.hpp"
#include "chromhom/tableau.hpp"

namespace chromhom {

void MultiplicityTable::set(const Partition& lambda, const BigInt& multiplicity) {
  if (lambda.size() != n_)
    throw std::invalid_argument("partition " + lambda.to_string() + " is not a partition of " +
                                std::to_string(n_));
  if (multiplicity < 0) throw std::invalid_argument("negative multiplicity");
  if (multiplicity == 0)
    entries_.erase(lambda);
  else
    entries_[lambda] = multiplicity;
}

BigInt MultiplicityTable::get(const Partition& lambda) const {
  auto it = entries_.find(lambda);
  return it == entries_.end() ? BigInt(0) : it->second;
}

std::string MultiplicityTable::to_text() const {
  std::ostringstream os;
  for (const auto& [lambda, m] : entries_) os << '"' << lambda.to_string() << "\": " << m << '\n';
  return os.str();
}

BigInt chain_multiplicity(const Graph& g, int i, const Partition& lambda) {
  if (lambda.size() != g.vertex_count())
    throw std::invalid_argument("chain_multiplicity: partition size differs from vertex count");
  std::map<Partition, int> types;
  for (const auto& f : spanning_subgraphs(g, i)) ++types[f.partition_type()];
  BigInt total = 0;
  for (const auto& [mu, count] : types) total += kostka(lambda, mu) * count;
  return total;
}

void check_homology_budget(const Graph& g, const HomologyOptions& options) {
  const int n = g.vertex_count();
  int limit = options.vertex_limit.value_or(options.allow_large ? kLargeHomologyVertexLimit
                                                                : kDefaultHomologyVertexLimit);
  if (n > limit)
    throw SizeLimitError("homology is limited to " + std::to_string(limit) + " vertices (graph has " +
                         std::to_string(n) + "); use --allow-large for 7");
  if (n > kDefaultHomologyVertexLimit && options.rank_mode == RankMode::exact)
    throw SizeLimitError("graphs above " + std::to_string(kDefaultHomologyVertexLimit) +
                         " vertices require modular rank mode");
  if (n > kMaxTabloidVertices) throw SizeLimitError("tabloid encoding is limited to 16 vertices");
}

namespace {

int checked_degree(const Graph& g, const HomologyOptions& options) {
  check_homology_budget(g, options);
  return g.vertex_count();
}

RankMode effective_mode(const Graph& g, RankMode requested) {
  if (g.vertex_count() > kDefaultHomologyVertexLimit && requested == RankMode::automatic)
    return RankMode::modular;
  return requested;
}

}  // namespace

HomologyEngine::HomologyEngine(const Graph& g, const HomologyOptions& options)
    : complex_(options.edge_order.empty() ? ChainComplex(g) : ChainComplex(g, options.edge_order)),
      projector_(checked_degree(g, options)),
      engine_(effective_mode(g, options.rank_mode), options.seed, options.exact_dimension_limit) {}

std::size_t HomologyEngine::boundary_rank(int i, const Partition& lambda) {
  auto key = std::make_pair(i, lambda);
  if (auto it = rank_cache_.find(key); it != rank_cache_.end()) return it->second;
  const SparseMatrix& d = complex_.boundary(i);
  std::size_t r = 0;
  if (i >= 1 && i <= complex_.top_index())
    r = isotypic_rank(d, complex_.layer(i), lambda, projector_, engine_);
  rank_cache_.emplace(std::move(key), r);
  return r;
}

HomologyResult HomologyEngine::homology(int i) {
  const int top = complex_.top_index();
  if (i < 0 || i > top) throw std::out_of_range("homology index out of range");
  const Graph& g = complex_.graph();
  HomologyResult out;
  out.index = i;
  out.table = MultiplicityTable(g.vertex_count());
  out.dim_previous = i >= 1 ? complex_.layer(i - 1).dimension : 0;
  out.dim_current = complex_.layer(i).dimension;
  out.dim_next = i < top ? complex_.layer(i + 1).dimension : 0;

  std::map<Partition, int> types;
  for (const auto& s : complex_.layer(i).summands) ++types[s.subgraph.partition_type()];

  for (const auto& lambda : partitions_of(g.vertex_count())) {
    IsotypicRow row;
    row.lambda = lambda;
    for (const auto& [mu, count] : types) row.chain_multiplicity += kostka(lambda, mu) * count;
    row.rank_outgoing = boundary_rank(i, lambda);
    row.rank_incoming = boundary_rank(i + 1, lambda);
    row.multiplicity = row.chain_multiplicity - row.rank_outgoing - row.rank_incoming;
    if (row.multiplicity < 0)
      throw InternalError("negative multiplicity for " + lambda.to_string() + " in H_" +
                          std::to_string(i));
    out.table.set(lambda, row.multiplicity);
    out.rows.push_back(std::move(row));
  }
  out.rank_mode = engine_.mode();
  out.primes = engine_.primes();
  out.rank_stats = engine_.stats();
  return out;
}

HomologyResult homology_multiplicities(const Graph& g, int i, const HomologyOptions& options) {
  HomologyEngine engine(g, options);
  return engine.homology(i);
}

}  // namespace chromhom

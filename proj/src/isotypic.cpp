#include "chromhom/isotypic.hpp"

#include <algorithm>
#include <stdexcept>

#include "chromhom/errors.hpp"
#include "chromhom/tableau.hpp"

namespace chromhom {

IsotypicProjector::IsotypicProjector(int n) : group_(n) {}

std::size_t IsotypicProjector::shape_index(const Partition& lambda) const {
  const auto& classes = group_.classes();
  auto it = std::find(classes.begin(), classes.end(), lambda);
  if (it == classes.end())
    throw std::invalid_argument("partition " + lambda.to_string() + " is not a partition of " +
                                std::to_string(degree()));
  return static_cast<std::size_t>(it - classes.begin());
}

std::vector<std::int64_t> IsotypicProjector::column(const TabloidBasis& basis, const Partition& lambda,
                                                    std::size_t index) const {
  if (basis.vertex_count() != degree()) throw std::invalid_argument("projector: degree mismatch");
  const auto& chi = group_.character_table()[shape_index(lambda)];
  std::vector<std::int64_t> out(basis.size(), 0);
  const auto& elements = group_.elements();
  for (std::size_t s = 0; s < elements.size(); ++s)
    out[basis.act(elements[s], index)] += chi[group_.class_of(s)];
  return out;
}

SparseMatrix IsotypicProjector::class_sum(const TabloidBasis& basis, std::size_t class_index) const {
  std::vector<SparseMatrix::Triplet> triplets;
  const auto& elements = group_.elements();
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t s = 0; s < elements.size(); ++s)
      if (group_.class_of(s) == class_index) triplets.push_back({basis.act(elements[s], c), c, 1});
  return SparseMatrix::from_triplets(basis.size(), basis.size(), std::move(triplets));
}

SparseMatrix IsotypicProjector::scaled_projector(const TabloidBasis& basis, const Partition& lambda) const {
  std::vector<SparseMatrix::Triplet> triplets;
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto col = column(basis, lambda, c);
    for (std::size_t r = 0; r < col.size(); ++r)
      if (col[r] != 0) triplets.push_back({r, c, col[r]});
  }
  return SparseMatrix::from_triplets(basis.size(), basis.size(), std::move(triplets));
}

const std::vector<std::vector<std::int64_t>>& IsotypicProjector::isotypic_basis(
    const TabloidBasis& basis, const Partition& lambda, std::uint32_t prime) const {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(basis.shape(), lambda);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  const std::size_t target = to_int64(kostka(lambda, basis.shape()) * f_syt(lambda));
  std::vector<std::vector<std::int64_t>> chosen;
  ModPEchelon echelon(basis.size(), prime);
  for (std::size_t t = 0; t < basis.size() && chosen.size() < target; ++t) {
    auto col = column(basis, lambda, t);
    if (echelon.insert(col)) chosen.push_back(std::move(col));
  }
  if (chosen.size() != target)
    throw InternalError("isotypic subspace for " + lambda.to_string() + " in M_" +
                        basis.shape().to_string() + " has dimension " + std::to_string(chosen.size()) +
                        ", expected " + std::to_string(target));
  return cache_.emplace(std::move(key), std::move(chosen)).first->second;
}

std::size_t isotypic_rank(const SparseMatrix& m, const ChainLayer& domain, const Partition& lambda,
                          const IsotypicProjector& projector, RankEngine& engine) {
  if (m.cols() != domain.dimension)
    throw std::invalid_argument("isotypic_rank: matrix does not act on this chain layer");
  if (m.rows() == 0 || m.is_zero()) return 0;
  std::vector<std::vector<std::int64_t>> images;
  for (const auto& s : domain.summands) {
    for (const auto& v : projector.isotypic_basis(*s.basis, lambda, engine.primes().first))
      images.push_back(m.apply_columns(s.offset, v));
  }
  const std::size_t r = engine.rank(images, m.rows());
  const std::size_t f = static_cast<std::size_t>(to_int64(f_syt(lambda)));
  if (r % f != 0)
    throw InternalError("isotypic rank " + std::to_string(r) + " for " + lambda.to_string() +
                        " is not a multiple of f^lambda = " + std::to_string(f));
  return r / f;
}

}  // namespace chromhom

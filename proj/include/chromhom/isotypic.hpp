#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "chromhom/chain_complex.hpp"
#include "chromhom/partition.hpp"
#include "chromhom/rank.hpp"
#include "chromhom/sparse_matrix.hpp"
#include "chromhom/symmetric_group.hpp"
#include "chromhom/tabloid.hpp"

namespace chromhom {

/// Central idempotents of the group algebra acting on permutation modules.
///
/// Works with the integral multiple Q_lambda = sum_sigma chi_lambda(sigma) sigma
/// of the projector P_lambda = (f^lambda / n!) Q_lambda, so every matrix
/// entry stays an integer.
class IsotypicProjector {
 public:
  explicit IsotypicProjector(int n);

  int degree() const noexcept { return group_.degree(); }
  const SymmetricGroup& group() const noexcept { return group_; }
  /// Position of lambda in partitions_of(n).
  std::size_t shape_index(const Partition& lambda) const;

  /// Column `index` of Q_lambda on the permutation module of `basis`.
  std::vector<std::int64_t> column(const TabloidBasis& basis, const Partition& lambda,
                                   std::size_t index) const;

  /// Sum of the action matrices of all elements of class `class_index`.
  SparseMatrix class_sum(const TabloidBasis& basis, std::size_t class_index) const;

  /// Q_lambda as a sparse matrix on the permutation module of `basis`.
  SparseMatrix scaled_projector(const TabloidBasis& basis, const Partition& lambda) const;

  /// Columns of Q_lambda forming a basis of the lambda-isotypic subspace of
  /// the permutation module; there are K_{lambda,shape} f^lambda of them.
  /// Selected modulo `prime` (independence mod p implies independence over
  /// the rationals). Cached per (shape, lambda). Throws InternalError if the
  /// expected dimension is not reached.
  const std::vector<std::vector<std::int64_t>>& isotypic_basis(const TabloidBasis& basis,
                                                               const Partition& lambda,
                                                               std::uint32_t prime) const;

 private:
  SymmetricGroup group_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<Partition, Partition>, std::vector<std::vector<std::int64_t>>> cache_;
};

/// Multiplicity of S_lambda in the image of `m`, where `m` is a
/// group-equivariant map out of the chain layer `domain`: the rank of m
/// restricted to the lambda-isotypic subspace, divided by f^lambda. Throws
/// InternalError if that division is inexact.
std::size_t isotypic_rank(const SparseMatrix& m, const ChainLayer& domain, const Partition& lambda,
                          const IsotypicProjector& projector, RankEngine& engine);

}  // namespace chromhom

#pragma once

#include <map>

#include "chromhom/bigint.hpp"
#include "chromhom/graph.hpp"
#include "chromhom/partition.hpp"

namespace chromhom {

enum class SymBasis { monomial, schur };

/// A homogeneous symmetric function of degree n in the monomial or Schur
/// basis. Zero coefficients are never stored.
struct CsfExpansion {
  SymBasis basis = SymBasis::monomial;
  int degree = 0;
  std::map<Partition, BigInt, std::greater<>> coefficients;

  BigInt coefficient(const Partition& p) const;

  friend bool operator==(const CsfExpansion&, const CsfExpansion&) = default;
};

inline constexpr int kDefaultCsfVertexLimit = 8;

/// Monomial expansion of X_G. The coefficient of m_mu is the number of proper
/// colorings using color i exactly mu_i times. Throws SizeLimitError above
/// `max_vertices`.
CsfExpansion chromatic_symmetric_function(const Graph& g, int max_vertices = kDefaultCsfVertexLimit);

/// Solves m = K^T s for s by back substitution in dominance order (the Kostka
/// matrix is unitriangular).
CsfExpansion csf_to_schur(const CsfExpansion& monomial);

/// s_lambda = sum_mu K_{lambda,mu} m_mu.
CsfExpansion schur_to_monomial(const CsfExpansion& schur);

/// Number of proper k-colorings, read off the monomial expansion via
/// m_mu(1^k) = k (k-1) ... (k - l + 1) / prod_j m_j(mu)!.
BigInt chromatic_polynomial_at(const CsfExpansion& monomial, int k);

}  // namespace chromhom

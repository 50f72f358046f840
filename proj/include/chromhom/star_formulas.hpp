#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chromhom/bigint.hpp"
#include "chromhom/homology.hpp"
#include "chromhom/partition.hpp"

namespace chromhom {

/// The shape l 2^k 1^(n - l - 2k) on n boxes.
///
/// With l = 2 the first row is itself a two-row, so 2^j 1^(n-2j) is encoded
/// as (l = 2, k = j - 1).
class StarShape {
 public:
  /// Throws DomainError unless l >= 2, k >= 0 and n - l - 2k >= 0.
  StarShape(int n, int ell, int k);

  /// Inverse of partition(); std::nullopt when lambda is not of this form.
  static std::optional<StarShape> from_partition(const Partition& lambda);

  int n() const noexcept { return n_; }
  int ell() const noexcept { return ell_; }
  int k() const noexcept { return k_; }
  int ones() const noexcept { return n_ - ell_ - 2 * k_; }

  Partition partition() const;
  /// The part below the first row, 2^k 1^(n - l - 2k).
  Partition tail() const;

  friend bool operator==(const StarShape&, const StarShape&) = default;

 private:
  int n_, ell_, k_;
};

/// Every valid shape for n vertices, in reverse-lexicographic order of the partition.
std::vector<StarShape> star_shapes(int n);

/// C(n-1, l-1) f^{tail} - f^{shape}: multiplicity of the shape in H_{1,0} of
/// the n-vertex star. Throws DomainError rather than returning a negative value.
BigInt mult_general(const StarShape& shape);

/// C(n-2, l), the multiplicity of l 2 1^(n-l-2). Requires 2 <= l <= n-2.
BigInt mult_hook_case(int n, int ell);

/// (n-2k+1) (C(n-1, k-1) - C(n, k-1)/k), the multiplicity of 2^k 1^(n-2k),
/// evaluated in exact rationals. Requires k >= 1 and 2k <= n; throws
/// DomainError if the value is not an integer.
BigInt mult_two_column(int n, int k);

/// Predicted H_{1,0} of the n-vertex star: mult_general on every l 2^k 1^m
/// shape and zero elsewhere. Valid only if no other shape survives, which is
/// conjectural; callers must surface that assumption.
MultiplicityTable predict_h10_star(int n);

/// Published H_{1,0} decompositions for stars on 4 to 7 vertices.
MultiplicityTable reference_h10_star(int n);

struct ConjectureViolation {
  int index;
  Partition lambda;
  BigInt multiplicity;
};

struct ConjectureReport {
  int n = 0;
  std::vector<int> indices_checked;
  std::vector<ConjectureViolation> violations;
  std::vector<HomologyResult> homology;

  bool holds() const noexcept { return violations.empty(); }
};

/// Computes H_{i,0}(star(n)) for every 0 <= i <= n-1 and lists each nonzero
/// multiplicity at a shape with i >= 2 or second part >= 3. H_{0,0} = S_{1^n}
/// is never listed.
ConjectureReport check_conjecture(int n, const HomologyOptions& options = {});

/// Whether (i, lambda) lies in the region where the conjecture predicts zero.
bool conjecture_forbids(int i, const Partition& lambda);

}  // namespace chromhom

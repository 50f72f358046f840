#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chromhom/bigint.hpp"
#include "chromhom/partition.hpp"

namespace chromhom {

/// A conjugacy class of the symmetric group, named by its cycle type.
struct ClassLabel {
  Partition cycle_type;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
  friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
};

/// A bijection of {1..n}; images()[v - 1] is the image of v.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a permutation of 1..n.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  /// (a * b)(v) = a(b(v)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  Partition cycle_type() const;
  int sign() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Irreducible character value chi_lambda on the class `mu`, by the
/// Murnaghan-Nakayama rule, memoized on (shape, remaining cycle type).
/// Conventions: chi_empty(empty) = 1.
BigInt character(const Partition& lambda, const ClassLabel& mu);

/// n! / z_mu.
BigInt class_size(const ClassLabel& mu);

/// z_mu = prod_i i^{m_i} m_i!.
BigInt centralizer_order(const ClassLabel& mu);

/// All n! elements of the symmetric group in lexicographic order of their
/// image lists, each tagged with the index of its class in partitions_of(n).
class SymmetricGroup {
 public:
  explicit SymmetricGroup(int n);

  int degree() const noexcept { return n_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Partition>& classes() const noexcept { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_index_[element]; }

  /// character_table()[lambda][class] as 64-bit integers; both axes follow partitions_of(n).
  const std::vector<std::vector<std::int64_t>>& character_table() const noexcept { return table_; }

 private:
  int n_;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> class_index_;
  std::vector<Partition> classes_;
  std::vector<std::vector<std::int64_t>> table_;
};

}  // namespace chromhom

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace chromhom {

/// An integer partition stored as a weakly decreasing list of positive parts.
///
/// The default-constructed partition is the empty partition of 0. The
/// natural ordering is lexicographic on the part list, so sorting in
/// descending order yields the reverse-lexicographic listing
/// 4 > 31 > 22 > 211 > 1111 used for all output.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// Sorts the parts first; zero parts are dropped.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return n_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// parts()[i], or 0 past the end.
  int part(int i) const noexcept {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  /// Number of parts equal to `value`.
  int multiplicity(int value) const noexcept;

  Partition conjugate() const;

  /// Dominance order: every prefix sum of *this is >= that of `other`.
  /// Only meaningful when both partition the same n.
  bool dominates(const Partition& other) const;

  /// "3,2,2"; the empty partition prints as "".
  std::string to_string() const;

  /// "3 2^2"; the empty partition prints as "".
  std::string to_exponent_string() const;

  /// Compact exponent notation such as "32^21" or "2^21^3".
  std::string to_compact_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Accepts the comma form "3,2,2" or the exponent form "3 2^2" / "2^2 1^3".
/// The empty string parses to the empty partition. Throws ParseError with the
/// character offset of the first problem.
Partition parse_partition(std::string_view text);

/// All partitions of n in reverse-lexicographic order (n first, 1^n last).
std::vector<Partition> partitions_of(int n);

/// The partition with `count` copies of `value`, e.g. block(2, 3) = 2^3.
Partition repeated(int value, int count);

/// Concatenates and re-sorts.
Partition join(const Partition& a, const Partition& b);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace chromhom

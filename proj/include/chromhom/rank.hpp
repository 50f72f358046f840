#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chromhom {

enum class RankMode { exact, modular, automatic };

std::string_view to_string(RankMode mode);
/// Accepts "exact", "modular", "auto". Throws std::invalid_argument otherwise.
RankMode parse_rank_mode(std::string_view text);

/// Rank of the span of `rows` over GF(p), by dense Gaussian elimination.
std::size_t rank_mod_p(std::span<const std::vector<std::int64_t>> rows, std::uint32_t p);

/// Rank over the rationals, by fraction-free (Bareiss) elimination on
/// arbitrary-precision integers.
std::size_t rank_exact(std::span<const std::vector<std::int64_t>> rows);

/// Row echelon form over GF(p) grown one vector at a time.
class ModPEchelon {
 public:
  ModPEchelon(std::size_t length, std::uint32_t p);

  /// Reduces `v` against the current pivots; keeps it and returns true when
  /// it is independent of everything inserted so far.
  bool insert(std::span<const std::int64_t> v);

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  std::size_t length_;
  std::uint64_t p_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
};

bool is_prime(std::uint64_t n);

/// Two distinct primes in [2^31 - 2^24, 2^31), chosen reproducibly from `seed`.
std::pair<std::uint32_t, std::uint32_t> choose_primes(std::uint64_t seed);

inline constexpr std::size_t kDefaultExactDimensionLimit = 2000;

/// Rank policy shared by one computation.
///
/// automatic: exact when both dimensions are at most the exact limit,
/// otherwise modular. modular: rank modulo two primes; if they disagree the
/// exact rank decides. exact: always exact.
class RankEngine {
 public:
  struct Stats {
    std::size_t exact_runs = 0;
    std::size_t modular_runs = 0;
    std::size_t prime_disagreements = 0;
  };

  explicit RankEngine(RankMode mode = RankMode::automatic, std::uint64_t seed = 1,
                      std::size_t exact_dimension_limit = kDefaultExactDimensionLimit);

  std::size_t rank(std::span<const std::vector<std::int64_t>> rows, std::size_t length);

  RankMode mode() const noexcept { return mode_; }
  std::pair<std::uint32_t, std::uint32_t> primes() const noexcept { return primes_; }
  std::size_t exact_dimension_limit() const noexcept { return exact_limit_; }
  const Stats& stats() const noexcept { return stats_; }

 private:
  RankMode mode_;
  std::pair<std::uint32_t, std::uint32_t> primes_;
  std::size_t exact_limit_;
  Stats stats_;
};

}  // namespace chromhom

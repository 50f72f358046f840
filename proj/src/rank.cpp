#include "chromhom/rank.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "chromhom/bigint.hpp"

namespace chromhom {

std::string_view to_string(RankMode mode) {
  switch (mode) {
    case RankMode::exact: return "exact";
    case RankMode::modular: return "modular";
    case RankMode::automatic: return "auto";
  }
  return "?";
}

RankMode parse_rank_mode(std::string_view text) {
  if (text == "exact") return RankMode::exact;
  if (text == "modular") return RankMode::modular;
  if (text == "auto") return RankMode::automatic;
  throw std::invalid_argument("unknown rank mode \"" + std::string(text) + "\"");
}

namespace {

std::uint32_t reduce(std::int64_t v, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = v % sp;
  if (r < 0) r += sp;
  return static_cast<std::uint32_t>(r);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1, x = b % m;
  for (; e; e >>= 1) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

}  // namespace

std::size_t rank_mod_p(std::span<const std::vector<std::int64_t>> rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t len = rows.front().size();
  ModPEchelon echelon(len, p);
  for (const auto& r : rows) {
    echelon.insert(r);
    if (echelon.rank() == len) break;
  }
  return echelon.rank();
}

std::size_t rank_exact(std::span<const std::vector<std::int64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<BigInt>> a;
  a.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("rank_exact: ragged rows");
    if (std::all_of(r.begin(), r.end(), [](std::int64_t v) { return v == 0; })) continue;
    a.emplace_back(r.begin(), r.end());
  }
  std::size_t rank = 0;
  BigInt prev = 1, t1, t2;
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const BigInt& pv = a[rank][col];
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      auto& row = a[i];
      const BigInt factor = row[col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        t1 = pv * row[j];
        t2 = factor * a[rank][j];
        t1 -= t2;
        row[j] = t1 / prev;
      }
      row[col] = 0;
    }
    prev = pv;
    ++rank;
  }
  return rank;
}

ModPEchelon::ModPEchelon(std::size_t length, std::uint32_t p) : length_(length), p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("ModPEchelon: modulus is not prime");
}

bool ModPEchelon::insert(std::span<const std::int64_t> v) {
  if (v.size() != length_) throw std::invalid_argument("ModPEchelon: wrong vector length");
  std::vector<std::uint32_t> w(length_);
  for (std::size_t i = 0; i < length_; ++i) w[i] = reduce(v[i], p_);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint64_t c = w[pivots_[k]];
    if (c == 0) continue;
    const auto& row = rows_[k];
    const std::uint64_t neg = p_ - c;
    for (std::size_t j = pivots_[k]; j < length_; ++j)
      if (row[j]) w[j] = static_cast<std::uint32_t>((w[j] + neg * row[j]) % p_);
  }
  std::size_t piv = 0;
  while (piv < length_ && w[piv] == 0) ++piv;
  if (piv == length_) return false;
  const std::uint64_t inv = inverse_mod(w[piv], p_);
  for (std::size_t j = piv; j < length_; ++j)
    w[j] = static_cast<std::uint32_t>(w[j] * inv % p_);
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  return true;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> choose_primes(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  constexpr std::uint64_t hi = 1ULL << 31;
  constexpr std::uint64_t lo = hi - (1ULL << 24);
  std::uniform_int_distribution<std::uint64_t> dist(lo, hi - 1);
  auto next_prime = [&] {
    std::uint64_t c = dist(rng) | 1ULL;
    while (!is_prime(c)) c = (c + 2 >= hi) ? lo + 1 : c + 2;
    return static_cast<std::uint32_t>(c);
  };
  const std::uint32_t a = next_prime();
  std::uint32_t b = next_prime();
  while (b == a) b = next_prime();
  return {a, b};
}

RankEngine::RankEngine(RankMode mode, std::uint64_t seed, std::size_t exact_dimension_limit)
    : mode_(mode), primes_(choose_primes(seed)), exact_limit_(exact_dimension_limit) {}

std::size_t RankEngine::rank(std::span<const std::vector<std::int64_t>> rows, std::size_t length) {
  for (const auto& r : rows)
    if (r.size() != length) throw std::invalid_argument("RankEngine: wrong row length");
  const bool exact = mode_ == RankMode::exact ||
                     (mode_ == RankMode::automatic && rows.size() <= exact_limit_ && length <= exact_limit_);
  if (exact) {
    ++stats_.exact_runs;
    return rank_exact(rows);
  }
  ++stats_.modular_runs;
  const std::size_t r1 = rank_mod_p(rows, primes_.first);
  const std::size_t r2 = rank_mod_p(rows, primes_.second);
  if (r1 == r2) return r1;
  ++stats_.prime_disagreements;
  ++stats_.exact_runs;
  return rank_exact(rows);
}

}  // namespace chromhom

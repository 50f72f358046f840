#include "chromhom/symmetric_group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace chromhom {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("permutation degrees differ");
  std::vector<int> out(b.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a(b.images_[i]);
  return Permutation(std::move(out));
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t v = start; !seen[v]; v = static_cast<std::size_t>(images_[v] - 1)) {
      seen[v] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

int Permutation::sign() const {
  const Partition ct = cycle_type();
  return (degree() - ct.length()) % 2 == 0 ? 1 : -1;
}

namespace {

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves
// one bead from position b to the free position b - r; the sign is the
// parity of beads strictly in between.
BigInt mn(const Partition& lambda, const std::vector<int>& mu, std::size_t from,
          std::map<std::pair<Partition, std::vector<int>>, BigInt>& memo) {
  if (from == mu.size()) return lambda.empty() ? 1 : 0;
  std::vector<int> rest(mu.begin() + static_cast<std::ptrdiff_t>(from), mu.end());
  auto key = std::make_pair(lambda, rest);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int r = mu[from];
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda.part(i) + (len - 1 - i);

  BigInt total = 0;
  for (int i = 0; i < len; ++i) {
    const int b = beta[static_cast<std::size_t>(i)] - r;
    if (b < 0 || std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
    int between = 0;
    for (int x : beta)
      if (x > b && x < beta[static_cast<std::size_t>(i)]) ++between;
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = b;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts;
    for (int j = 0; j < len; ++j) {
      const int p = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
      if (p > 0) parts.push_back(p);
    }
    const BigInt sub = mn(Partition(std::move(parts)), mu, from + 1, memo);
    total += (between % 2 == 0) ? sub : BigInt(-sub);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt character(const Partition& lambda, const ClassLabel& mu) {
  if (lambda.size() != mu.cycle_type.size())
    throw std::invalid_argument("character: shape and class have different sizes");
  static std::shared_mutex mutex;
  static std::map<std::pair<Partition, std::vector<int>>, BigInt> memo;
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find({lambda, mu.cycle_type.parts()}); it != memo.end()) return it->second;
  }
  std::unique_lock lock(mutex);
  return mn(lambda, mu.cycle_type.parts(), 0, memo);
}

BigInt centralizer_order(const ClassLabel& mu) {
  BigInt z = 1;
  const auto& parts = mu.cycle_type.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int m = static_cast<int>(j - i);
    for (int t = 0; t < m; ++t) z *= parts[i];
    z *= factorial(m);
    i = j;
  }
  return z;
}

BigInt class_size(const ClassLabel& mu) {
  return factorial(mu.cycle_type.size()) / centralizer_order(mu);
}

SymmetricGroup::SymmetricGroup(int n) : n_(n), classes_(partitions_of(n)) {
  if (n < 0 || n > 9) throw std::invalid_argument("SymmetricGroup: degree out of range");
  std::map<Partition, std::uint32_t> index;
  for (std::size_t c = 0; c < classes_.size(); ++c) index.emplace(classes_[c], static_cast<std::uint32_t>(c));
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    elements_.emplace_back(images);
    class_index_.push_back(index.at(elements_.back().cycle_type()));
  } while (std::next_permutation(images.begin(), images.end()));

  for (const auto& lambda : classes_) {
    std::vector<std::int64_t> row;
    for (const auto& mu : classes_) row.push_back(to_int64(character(lambda, ClassLabel{mu})));
    table_.push_back(std::move(row));
  }
}

}  // namespace chromhom

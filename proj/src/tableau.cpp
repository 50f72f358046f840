#include "chromhom/tableau.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "chromhom/errors.hpp"

namespace chromhom {

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw std::invalid_argument("tableau row count does not match shape");
  for (int r = 0; r < shape_.length(); ++r)
    if (static_cast<int>(rows_[static_cast<std::size_t>(r)].size()) != shape_.part(r))
      throw std::invalid_argument("tableau row length does not match shape");
}

Tableau Tableau::from_rows(std::vector<std::vector<int>> rows) {
  std::vector<int> lengths;
  for (const auto& row : rows) lengths.push_back(static_cast<int>(row.size()));
  return Tableau(Partition(std::move(lengths)), std::move(rows));
}

bool Tableau::is_ssyt() const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (rows_[r][c] <= 0) return false;
      if (c > 0 && rows_[r][c - 1] > rows_[r][c]) return false;
      if (r > 0 && rows_[r - 1][c] >= rows_[r][c]) return false;
    }
  }
  return true;
}

bool Tableau::is_syt() const {
  if (!is_ssyt()) return false;
  const auto counts = content();
  return static_cast<int>(counts.size()) == shape_.size() &&
         std::all_of(counts.begin(), counts.end(), [](int c) { return c == 1; });
}

std::vector<int> Tableau::content() const {
  std::vector<int> counts;
  for (const auto& row : rows_)
    for (int v : row) {
      if (v <= 0) continue;
      if (static_cast<int>(counts.size()) < v) counts.resize(static_cast<std::size_t>(v), 0);
      ++counts[static_cast<std::size_t>(v - 1)];
    }
  return counts;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> word;
  for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
  return word;
}

std::string Tableau::to_string() const {
  const auto word = reading_word();
  const bool wide = std::any_of(word.begin(), word.end(), [](int v) { return v > 9; });
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += '/';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (wide && c) out += ',';
      out += std::to_string(rows_[r][c]);
    }
  }
  return out;
}

Tableau hook_lengths(const Partition& shape) {
  const Partition conj = shape.conjugate();
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < shape.length(); ++r) {
    std::vector<int> row;
    for (int c = 0; c < shape.part(r); ++c) {
      const int arm = shape.part(r) - c - 1;
      const int leg = conj.part(c) - r - 1;
      row.push_back(arm + leg + 1);
    }
    rows.push_back(std::move(row));
  }
  return Tableau(shape, std::move(rows));
}

BigInt f_syt(const Partition& shape) {
  BigInt denom = 1;
  const Tableau hooks = hook_lengths(shape);
  for (const auto& row : hooks.rows())
    for (int h : row) denom *= h;
  const BigInt num = factorial(shape.size());
  if (num % denom != 0)
    throw InternalError("hook length product does not divide n! for " + shape.to_string());
  return num / denom;
}

namespace {

// Column-major backtracking over the boxes of `shape`, with a per-value
// budget taken from `content`. Each completed filling is passed to `emit`.
template <typename Emit>
class SsytFiller {
 public:
  SsytFiller(const Partition& shape, const Partition& content, Emit emit)
      : shape_(shape), budget_(content.parts()), emit_(emit) {
    for (int r = 0; r < shape.length(); ++r)
      rows_.emplace_back(static_cast<std::size_t>(shape.part(r)), 0);
    const Partition conj = shape.conjugate();
    for (int c = 0; c < conj.length(); ++c)
      for (int r = 0; r < conj.part(c); ++r) cells_.emplace_back(r, c);
  }

  void run() { place(0); }

 private:
  void place(std::size_t idx) {
    if (idx == cells_.size()) {
      emit_(rows_);
      return;
    }
    const auto [r, c] = cells_[idx];
    auto& cell = rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, rows_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= static_cast<int>(budget_.size()); ++v) {
      auto& left = budget_[static_cast<std::size_t>(v - 1)];
      if (left == 0) continue;
      --left;
      cell = v;
      place(idx + 1);
      ++left;
    }
    cell = 0;
  }

  const Partition& shape_;
  std::vector<int> budget_;
  Emit emit_;
  std::vector<std::vector<int>> rows_;
  std::vector<std::pair<int, int>> cells_;
};

void require_same_size(const Partition& shape, const Partition& content) {
  if (shape.size() != content.size())
    throw std::invalid_argument("shape " + shape.to_string() + " and content " +
                                content.to_string() + " have different sizes");
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& content) {
  require_same_size(shape, content);
  std::vector<Tableau> out;
  auto emit = [&](const std::vector<std::vector<int>>& rows) { out.emplace_back(shape, rows); };
  SsytFiller<decltype(emit)>(shape, content, emit).run();
  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

std::vector<Tableau> enumerate_syt(const Partition& shape) {
  return enumerate_ssyt(shape, repeated(1, shape.size()));
}

BigInt kostka(const Partition& shape, const Partition& content) {
  require_same_size(shape, content);
  static std::shared_mutex mutex;
  static std::map<std::pair<Partition, Partition>, BigInt> memo;
  auto key = std::make_pair(shape, content);
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  BigInt count = 0;
  auto emit = [&](const std::vector<std::vector<int>>&) { ++count; };
  SsytFiller<decltype(emit)>(shape, content, emit).run();
  std::unique_lock lock(mutex);
  return memo.try_emplace(std::move(key), count).first->second;
}

}  // namespace chromhom

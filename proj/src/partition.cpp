#include "chromhom/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "chromhom/errors.hpp"

namespace chromhom {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition Partition::conjugate() const {
  std::vector<int> conj(static_cast<std::size_t>(part(0)), 0);
  for (int p : parts_)
    for (int c = 0; c < p; ++c) ++conj[static_cast<std::size_t>(c)];
  return Partition(std::move(conj));
}

bool Partition::dominates(const Partition& other) const {
  int a = 0, b = 0;
  const int len = std::max(length(), other.length());
  for (int i = 0; i < len; ++i) {
    a += part(i);
    b += other.part(i);
    if (a < b) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

// Runs of equal parts as (value, count), in order.
std::vector<std::pair<int, int>> runs(const std::vector<int>& parts) {
  std::vector<std::pair<int, int>> out;
  for (int p : parts) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

}  // namespace

std::string Partition::to_exponent_string() const {
  std::string out;
  for (auto [value, count] : runs(parts_)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(value);
    if (count > 1) out += '^' + std::to_string(count);
  }
  return out;
}

std::string Partition::to_compact_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (auto [value, count] : runs(parts_)) {
    out += std::to_string(value);
    if (count > 1) out += '^' + std::to_string(count);
  }
  return out;
}

namespace {

class PartitionParser {
 public:
  explicit PartitionParser(std::string_view text) : text_(text) {}

  Partition parse() {
    skip_spaces();
    if (pos_ == text_.size()) return Partition();
    const bool comma_form = text_.find(',') != std::string_view::npos;
    std::vector<int> parts;
    while (true) {
      skip_spaces();
      const std::size_t start = pos_;
      const int value = number();
      int count = 1;
      if (peek() == '^') {
        if (comma_form) fail("exponent not allowed in comma form", pos_);
        ++pos_;
        const std::size_t at = pos_;
        count = number();
        if (count <= 0) fail("exponent must be positive", at);
      }
      if (value <= 0) fail("parts must be positive", start);
      if (!parts.empty() && value > parts.back())
        fail("parts must be weakly decreasing", start);
      parts.insert(parts.end(), static_cast<std::size_t>(count), value);
      skip_spaces();
      if (pos_ == text_.size()) break;
      if (comma_form) {
        if (peek() != ',') fail("expected ','", pos_);
        ++pos_;
      }
    }
    return Partition(std::move(parts));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_spaces() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  int number() {
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("number too large", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected a positive integer", start);
    return static_cast<int>(value);
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError("invalid partition \"" + std::string(text_) + "\": " + msg, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Partition parse_partition(std::string_view text) { return PartitionParser(text).parse(); }

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

Partition repeated(int value, int count) {
  return Partition(std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), value));
}

Partition join(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition::from_unsorted(std::move(parts));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
  return h;
}

}  // namespace chromhom

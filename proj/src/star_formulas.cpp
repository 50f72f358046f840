#include "chromhom/star_formulas.hpp"

#include <algorithm>

#include "chromhom/errors.hpp"
#include "chromhom/tableau.hpp"

namespace chromhom {

StarShape::StarShape(int n, int ell, int k) : n_(n), ell_(ell), k_(k) {
  if (ell < 2 || k < 0 || n - ell - 2 * k < 0)
    throw DomainError("no shape l 2^k 1^(n-l-2k) with n=" + std::to_string(n) + ", l=" +
                      std::to_string(ell) + ", k=" + std::to_string(k));
}

std::optional<StarShape> StarShape::from_partition(const Partition& lambda) {
  if (lambda.empty() || lambda.part(0) < 2) return std::nullopt;
  for (int i = 1; i < lambda.length(); ++i)
    if (lambda.part(i) > 2) return std::nullopt;
  const int ell = lambda.part(0);
  int twos = lambda.multiplicity(2);
  if (ell == 2) --twos;
  return StarShape(lambda.size(), ell, twos);
}

Partition StarShape::tail() const { return join(repeated(2, k_), repeated(1, ones())); }

Partition StarShape::partition() const { return join(Partition({ell_}), tail()); }

std::vector<StarShape> star_shapes(int n) {
  std::vector<StarShape> out;
  for (const auto& lambda : partitions_of(n))
    if (auto s = StarShape::from_partition(lambda)) out.push_back(*s);
  return out;
}

BigInt mult_general(const StarShape& shape) {
  const BigInt value =
      binomial(shape.n() - 1, shape.ell() - 1) * f_syt(shape.tail()) - f_syt(shape.partition());
  if (value < 0)
    throw DomainError("closed form is negative (" + value.str() + ") for " +
                      shape.partition().to_string());
  return value;
}

BigInt mult_hook_case(int n, int ell) {
  if (ell < 2 || ell > n - 2)
    throw DomainError("hook case needs 2 <= l <= n-2 (n=" + std::to_string(n) + ", l=" +
                      std::to_string(ell) + ")");
  return binomial(n - 2, ell);
}

BigInt mult_two_column(int n, int k) {
  if (k < 1 || 2 * k > n)
    throw DomainError("two-column case needs 1 <= k and 2k <= n (n=" + std::to_string(n) + ", k=" +
                      std::to_string(k) + ")");
  const Rational value = Rational(n - 2 * k + 1) *
                         (Rational(binomial(n - 1, k - 1)) - Rational(binomial(n, k - 1), BigInt(k)));
  if (denominator(value) != 1)
    throw DomainError("two-column formula is not integral for n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
  return numerator(value);
}

MultiplicityTable predict_h10_star(int n) {
  if (n < 4) throw DomainError("prediction defined for stars with at least 4 vertices");
  MultiplicityTable out(n);
  for (const auto& shape : star_shapes(n)) out.set(shape.partition(), mult_general(shape));
  return out;
}

MultiplicityTable reference_h10_star(int n) {
  struct Entry {
    int n;
    std::vector<int> parts;
    int multiplicity;
  };
  static const std::vector<Entry> entries = {
      {4, {2, 2}, 1},
      {5, {2, 2, 1}, 3},       {5, {3, 2}, 1},
      {6, {2, 2, 1, 1}, 6},    {6, {2, 2, 2}, 5},    {6, {3, 2, 1}, 4},    {6, {4, 2}, 1},
      {7, {2, 2, 1, 1, 1}, 10}, {7, {2, 2, 2, 1}, 16}, {7, {3, 2, 1, 1}, 10},
      {7, {3, 2, 2}, 9},       {7, {4, 2, 1}, 5},    {7, {5, 2}, 1},
  };
  if (n < 4 || n > 7) throw DomainError("reference values exist only for 4 <= n <= 7");
  MultiplicityTable out(n);
  for (const auto& e : entries)
    if (e.n == n) out.set(Partition(e.parts), e.multiplicity);
  return out;
}

bool conjecture_forbids(int i, const Partition& lambda) {
  if (i == 0 && lambda == repeated(1, lambda.size())) return false;
  return i >= 2 || lambda.part(1) >= 3;
}

ConjectureReport check_conjecture(int n, const HomologyOptions& options) {
  ConjectureReport report;
  report.n = n;
  HomologyEngine engine(star(n), options);
  for (int i = 0; i <= n - 1; ++i) {
    HomologyResult h = engine.homology(i);
    for (const auto& [lambda, m] : h.table.entries())
      if (conjecture_forbids(i, lambda)) report.violations.push_back({i, lambda, m});
    report.indices_checked.push_back(i);
    report.homology.push_back(std::move(h));
  }
  return report;
}

}  // namespace chromhom

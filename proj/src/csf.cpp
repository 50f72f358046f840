#include "chromhom/csf.hpp"

#include <stdexcept>

#include "chromhom/errors.hpp"
#include "chromhom/tableau.hpp"

namespace chromhom {

BigInt CsfExpansion::coefficient(const Partition& p) const {
  auto it = coefficients.find(p);
  return it == coefficients.end() ? BigInt(0) : it->second;
}

namespace {

// Counts proper colorings with an exact color budget, assigning vertices in
// order 1..n.
class ExactContentColorings {
 public:
  ExactContentColorings(const Graph& g, const Partition& content)
      : n_(g.vertex_count()), budget_(content.parts()), color_(static_cast<std::size_t>(n_ + 1), 0),
        earlier_(static_cast<std::size_t>(n_ + 1)) {
    for (auto [u, v] : g.edges()) earlier_[static_cast<std::size_t>(v)].push_back(u);
  }

  BigInt count() {
    total_ = 0;
    assign(1);
    return total_;
  }

 private:
  void assign(int v) {
    if (v > n_) {
      ++total_;
      return;
    }
    for (std::size_t c = 0; c < budget_.size(); ++c) {
      if (budget_[c] == 0) continue;
      const int colour = static_cast<int>(c) + 1;
      bool clash = false;
      for (int u : earlier_[static_cast<std::size_t>(v)])
        if (color_[static_cast<std::size_t>(u)] == colour) {
          clash = true;
          break;
        }
      if (clash) continue;
      --budget_[c];
      color_[static_cast<std::size_t>(v)] = colour;
      assign(v + 1);
      color_[static_cast<std::size_t>(v)] = 0;
      ++budget_[c];
    }
  }

  int n_;
  std::vector<int> budget_;
  std::vector<int> color_;
  std::vector<std::vector<int>> earlier_;
  BigInt total_;
};

}  // namespace

CsfExpansion chromatic_symmetric_function(const Graph& g, int max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw SizeLimitError("chromatic symmetric function limited to " + std::to_string(max_vertices) +
                         " vertices");
  CsfExpansion out{SymBasis::monomial, g.vertex_count(), {}};
  for (const auto& mu : partitions_of(g.vertex_count())) {
    BigInt c = ExactContentColorings(g, mu).count();
    if (c != 0) out.coefficients.emplace(mu, std::move(c));
  }
  return out;
}

CsfExpansion csf_to_schur(const CsfExpansion& monomial) {
  if (monomial.basis != SymBasis::monomial)
    throw std::invalid_argument("csf_to_schur expects a monomial expansion");
  CsfExpansion out{SymBasis::schur, monomial.degree, {}};
  // Reverse-lex order extends dominance, so every rho dominating lambda is
  // already solved when lambda is reached.
  const auto shapes = partitions_of(monomial.degree);
  for (const auto& lambda : shapes) {
    BigInt c = monomial.coefficient(lambda);
    for (const auto& [rho, coeff] : out.coefficients)
      if (rho != lambda) c -= coeff * kostka(rho, lambda);
    if (c != 0) out.coefficients.emplace(lambda, std::move(c));
  }
  return out;
}

CsfExpansion schur_to_monomial(const CsfExpansion& schur) {
  if (schur.basis != SymBasis::schur)
    throw std::invalid_argument("schur_to_monomial expects a Schur expansion");
  CsfExpansion out{SymBasis::monomial, schur.degree, {}};
  for (const auto& mu : partitions_of(schur.degree)) {
    BigInt c = 0;
    for (const auto& [lambda, coeff] : schur.coefficients) c += coeff * kostka(lambda, mu);
    if (c != 0) out.coefficients.emplace(mu, std::move(c));
  }
  return out;
}

BigInt chromatic_polynomial_at(const CsfExpansion& monomial, int k) {
  if (monomial.basis != SymBasis::monomial)
    throw std::invalid_argument("chromatic_polynomial_at expects a monomial expansion");
  BigInt total = 0;
  for (const auto& [mu, coeff] : monomial.coefficients) {
    BigInt falling = 1;
    for (int j = 0; j < mu.length(); ++j) falling *= (k - j);
    BigInt sym = 1;
    for (int value = 1; value <= mu.size(); ++value) sym *= factorial(mu.multiplicity(value));
    total += coeff * (falling / sym);
  }
  return total;
}

}  // namespace chromhom

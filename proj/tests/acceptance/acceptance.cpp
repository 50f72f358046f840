// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <numeric>
#include <sstream>

#include "chromhom/chain_complex.hpp"
#include "chromhom/homology.hpp"
#include "chromhom/isotypic.hpp"
#include "chromhom/star_formulas.hpp"
#include "chromhom/symmetric_group.hpp"
#include "chromhom/tableau.hpp"
#include "chromhom/verify.hpp"
#include "random_graphs.hpp"

using namespace chromhom;

namespace {

// Collects the first few failure messages of a criterion.
struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (failures.size() < 5) failures.push_back(what);
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s << "s";
  return os.str();
}

// Homology tables shared by criteria 2 and 3.
std::map<int, HomologyResult> h1_star;

HomologyOptions options_for(int n) {
  HomologyOptions o;
  o.rank_mode = n >= 6 ? RankMode::modular : RankMode::automatic;
  return o;
}

void criterion1(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const VerifyReport r = verify_table1();
  std::size_t entries = 0;
  for (int n = 4; n <= 7; ++n) entries += reference_h10_star(n).entries().size();
  out.require(r.checks.size() == 4, "expected 4 table rows");
  for (const auto& c : r.checks) out.require(c.passed, c.name + ": " + c.detail);
  const auto p7 = predict_h10_star(7);
  out.require(p7.get(Partition({2, 2, 2, 1})) == 16, "S_{2^3 1} at n=7");
  out.require(p7.get(Partition({3, 2, 2})) == 9, "S_{32^2} at n=7");
  const double dt = seconds_since(t0);
  out.require(dt < 1.0, "runtime " + fmt_seconds(dt));
  out.note(std::to_string(entries) + " nonzero entries over n=4..7, " + fmt_seconds(dt));
}

void criterion2(Outcome& out) {
  for (int n = 4; n <= 6; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    HomologyResult h = homology_multiplicities(star(n), 1, options_for(n));
    const double dt = seconds_since(t0);
    const auto want = reference_h10_star(n);
    out.require(h.table == want, "star(" + std::to_string(n) + ") table mismatch");
    // every shape absent from the table must come out as zero
    for (const auto& lambda : partitions_of(n))
      if (want.get(lambda) == 0) out.require(h.table.get(lambda) == 0, "nonzero " + lambda.to_string());
    out.require(dt < (n <= 5 ? 10.0 : 600.0), "star(" + std::to_string(n) + ") runtime " + fmt_seconds(dt));
    out.note("n=" + std::to_string(n) + " " + std::string(to_string(h.rank_mode)) + " " + fmt_seconds(dt));
    h1_star.emplace(n, std::move(h));
  }
}

void criterion3(Outcome& out) {
  std::size_t shapes = 0;
  for (int n = 4; n <= 6; ++n) {
    auto it = h1_star.find(n);
    if (it == h1_star.end()) it = h1_star.emplace(n, homology_multiplicities(star(n), 1, options_for(n))).first;
    for (const auto& s : star_shapes(n)) {
      ++shapes;
      out.require(mult_general(s) == it->second.table.get(s.partition()),
                  "shape " + s.partition().to_string());
    }
  }
  out.note(std::to_string(shapes) + " shapes");
}

void criterion4(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t checks = 0;
  for (int n = 4; n <= 30; ++n) {
    for (int ell = 2; ell <= n - 2; ++ell, ++checks)
      out.require(mult_hook_case(n, ell) == mult_general(StarShape(n, ell, 1)),
                  "hook n=" + std::to_string(n) + " l=" + std::to_string(ell));
    for (int k = 1; 2 * k <= n; ++k, ++checks)
      out.require(mult_two_column(n, k) == mult_general(StarShape(n, 2, k - 1)),
                  "two-column n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  const double dt = seconds_since(t0);
  out.require(dt < 1.0, "runtime " + fmt_seconds(dt));
  out.note(std::to_string(checks) + " identities, " + fmt_seconds(dt));
}

std::vector<int> hook_multiset(const Partition& p) {
  std::vector<int> out;
  const Tableau hooks = hook_lengths(p);
  for (const auto& row : hooks.rows()) out.insert(out.end(), row.begin(), row.end());
  return out;
}

void criterion5(Outcome& out) {
  out.require(f_syt(Partition({2, 2})) == 2, "f^{2^2}");
  out.require(f_syt(Partition({3, 2, 2})) == 21, "f^{32^2}");
  out.require(binomial(6, 2) * f_syt(Partition({2, 2})) - f_syt(Partition({3, 2, 2})) == 9, "15*2-21");
  out.require(mult_general(StarShape(7, 3, 2)) == 9, "closed form at 32^2");
  out.require(hook_multiset(Partition({3, 2})) == std::vector<int>{4, 3, 1, 2, 1}, "hooks of 32");
  out.require(hook_multiset(Partition({3, 2, 2})) == std::vector<int>{5, 4, 1, 3, 2, 2, 1}, "hooks of 32^2");
}

SparseMatrix scaled(const SparseMatrix& m, std::int64_t s) {
  std::vector<SparseMatrix::Triplet> t;
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) t.push_back({e.row, c, e.value * s});
  return SparseMatrix::from_triplets(m.rows(), m.cols(), std::move(t));
}

void criterion6(Outcome& out) {
  std::mt19937 rng(20240611);

  // d o d = 0
  std::vector<Graph> random_graphs;
  for (int t = 0; t < 25; ++t) random_graphs.push_back(testutil::random_graph(rng, 5));
  std::vector<Graph> dd_graphs;
  for (int n = 2; n <= 6; ++n) dd_graphs.push_back(star(n));
  dd_graphs.insert(dd_graphs.end(), random_graphs.begin(), random_graphs.end());
  for (const auto& g : dd_graphs) {
    const ChainComplex cc(g);
    for (int i = 2; i <= cc.top_index(); ++i)
      out.require((cc.boundary(i - 1) * cc.boundary(i)).is_zero(), "d o d on " + g.to_text());
  }

  // equivariance, 20 permutations per graph
  std::vector<Graph> small{star(3), star(4), star(5)};
  small.insert(small.end(), random_graphs.begin(), random_graphs.begin() + 10);
  for (const auto& g : small) {
    const ChainComplex cc(g);
    for (int s = 0; s < 20; ++s) {
      const auto sigma = testutil::random_permutation(rng, g.vertex_count());
      for (int i = 1; i <= cc.top_index(); ++i)
        out.require(cc.action_matrix(i - 1, sigma) * cc.boundary(i) == cc.boundary(i) * cc.action_matrix(i, sigma),
                    "equivariance");
    }
  }

  // projectors
  for (int n = 1; n <= 5; ++n) {
    const IsotypicProjector proj(n);
    const auto nfact = to_int64(factorial(n));
    for (const auto& shape : partitions_of(n)) {
      const TabloidBasis basis(shape);
      SparseMatrix total(basis.size(), basis.size());
      for (const auto& lambda : partitions_of(n)) {
        const SparseMatrix q = proj.scaled_projector(basis, lambda);
        const auto f = to_int64(f_syt(lambda));
        out.require(q * q == scaled(q, nfact / f), "idempotence " + lambda.to_string());
        total = total - scaled(q, -f);
      }
      out.require(total == scaled(SparseMatrix::identity(basis.size()), nfact), "completeness " + shape.to_string());
    }
  }

  // invariance and rank-nullity
  std::vector<Graph> hom{star(3), star(4), star(5)};
  hom.insert(hom.end(), random_graphs.begin(), random_graphs.begin() + 10);
  for (const auto& g : hom) {
    const ChainComplex cc(g);
    HomologyOptions reversed;
    reversed.edge_order.assign(g.edges().rbegin(), g.edges().rend());
    const auto sigma = testutil::random_permutation(rng, g.vertex_count());
    const Graph relabeled = g.relabeled(sigma.images());
    for (int i = 0; i <= g.edge_count(); ++i) {
      const auto base = homology_multiplicities(g, i);
      out.require(homology_multiplicities(g, i, reversed).table == base.table, "edge-order reversal");
      out.require(homology_multiplicities(relabeled, i).table == base.table, "relabeling");
      BigInt weighted = 0;
      for (const auto& [lambda, m] : base.table.entries()) weighted += m * f_syt(lambda);
      const BigInt plain = BigInt(cc.layer(i).dimension) - BigInt(rank_exact(cc.boundary(i).to_dense())) -
                           BigInt(rank_exact(cc.boundary(i + 1).to_dense()));
      out.require(weighted == plain, "rank-nullity i=" + std::to_string(i));
    }
  }
  out.note(std::to_string(dd_graphs.size()) + " graphs for d o d, " + std::to_string(small.size()) +
           " for equivariance, " + std::to_string(hom.size()) + " for homology invariants");
}

std::string render_findings(const VerifyReport& r) {
  std::ostringstream os;
  for (const auto& f : r.findings)
    os << f.n << " " << f.violation.index << " " << f.violation.lambda.to_string() << " "
       << f.violation.multiplicity << "\n";
  return os.str();
}

void criterion7(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const VerifyReport r = verify_conjecture(5, HomologyOptions{});
  out.require(r.checks_passed(), "conjecture suite checks");
  for (int n = 4; n <= 5; ++n) {
    const ConjectureReport c = check_conjecture(n);
    std::vector<int> expected(static_cast<std::size_t>(n));
    std::iota(expected.begin(), expected.end(), 0);
    out.require(c.indices_checked == expected, "indices 0..n-1 for n=" + std::to_string(n));
  }
  out.note(std::to_string(r.findings.size()) + " violations for n <= 5");
  out.require(r.exit_code() == (r.findings.empty() ? kExitOk : kExitConjectureViolation), "exit code");

  // a nonempty list must map to exit code 3 and render reproducibly
  VerifyReport synthetic = r;
  synthetic.findings.push_back({5, {2, Partition({3, 2}), 1}});
  out.require(synthetic.exit_code() == kExitConjectureViolation, "synthetic finding exit code");
  out.require(render_findings(synthetic) == render_findings(synthetic) && !render_findings(synthetic).empty(),
              "synthetic report");
  const double dt = seconds_since(t0);
  out.require(dt < 900.0, "runtime " + fmt_seconds(dt));
  out.note(fmt_seconds(dt));
}

void criterion8(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 0; n <= 8; ++n) {
    BigInt sum = 0;
    for (const auto& p : partitions_of(n)) {
      out.require(BigInt(enumerate_syt(p).size()) == f_syt(p), "SYT count " + p.to_string());
      sum += f_syt(p) * f_syt(p);
    }
    out.require(sum == factorial(n), "sum of squares n=" + std::to_string(n));
  }
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : partitions_of(n)) {
      BigInt total = 0;
      for (const auto& lambda : partitions_of(n)) total += kostka(lambda, mu) * f_syt(lambda);
      BigInt multinomial = factorial(n);
      for (int part : mu.parts()) multinomial /= factorial(part);
      out.require(total == multinomial, "Kostka sum " + mu.to_string());
    }
  for (int n = 1; n <= 6; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& a : ps)
      for (const auto& b : ps) {
        BigInt s = 0;
        for (const auto& mu : ps)
          s += class_size(ClassLabel{mu}) * character(a, ClassLabel{mu}) * character(b, ClassLabel{mu});
        out.require(s == (a == b ? factorial(n) : BigInt(0)), "orthogonality " + a.to_string() + "/" + b.to_string());
      }
  }
  const double dt = seconds_since(t0);
  out.require(dt < 120.0, "runtime " + fmt_seconds(dt));
  out.note(fmt_seconds(dt));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"reference H_{1,0} table from the closed form, stars on 4..7 vertices", criterion1},
      {"reference H_{1,0} table from the chain oracle, stars on 4..6 vertices", criterion2},
      {"general formula vs oracle on every l 2^k 1^m shape, n = 4..6", criterion3},
      {"hook and two-column formulas vs general formula, n <= 30", criterion4},
      {"worked arithmetic and hook diagrams", criterion5},
      {"structural properties of the chain complex", criterion6},
      {"conjecture instrument, n <= 5", criterion7},
      {"combinatorial kernel", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (out.ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first;
    std::string detail;
    for (const auto& n : out.notes) detail += (detail.empty() ? "" : "; ") + n;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << '\n';
    for (const auto& f : out.failures) std::cout << "      " << f << '\n';
    std::cout.flush();
    if (!out.ok) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

// Command-line front end: tableaux arithmetic, chromatic symmetric functions,
// degree-0 homology tables and the verification harness.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chromhom/csf.hpp"
#include "chromhom/errors.hpp"
#include "chromhom/graph.hpp"
#include "chromhom/homology.hpp"
#include "chromhom/star_formulas.hpp"
#include "chromhom/symmetric_group.hpp"
#include "chromhom/tableau.hpp"
#include "chromhom/verify.hpp"

namespace {

using namespace chromhom;
using json = nlohmann::ordered_json;

enum class Format { table, json, csv };

struct GraphSource {
  std::optional<int> star_n;
  std::string file;

  void add_to(CLI::App* cmd) {
    auto* s = cmd->add_option("--star", star_n, "use the star graph on N vertices");
    auto* f = cmd->add_option("--graph", file, "read the graph from FILE");
    s->excludes(f);
  }

  Graph load() const {
    if (star_n && !file.empty()) throw std::invalid_argument("give exactly one of --star and --graph");
    if (star_n) return star(*star_n);
    if (!file.empty()) return load_graph(file);
    throw std::invalid_argument("a graph is required: --star N or --graph FILE");
  }

  json describe() const {
    json j;
    if (star_n) j["star"] = *star_n;
    else j["graph_file"] = file;
    return j;
  }
};

struct Common {
  Format format = Format::table;
  std::string rank_mode = "auto";
  bool allow_large = false;
  std::optional<int> max_vertices;
  std::uint64_t seed = 1;

  void add_format(CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}}));
  }

  void add_rank(CLI::App* cmd) {
    cmd->add_option("--rank-mode", rank_mode, "rank backend")->check(CLI::IsMember({"exact", "modular", "auto"}));
    cmd->add_flag("--allow-large", allow_large, "permit 7-vertex graphs (modular ranks only)");
    cmd->add_option("--max-vertices", max_vertices, "override the vertex budget");
    cmd->add_option("--seed", seed, "seed for prime selection");
  }

  HomologyOptions options() const {
    HomologyOptions o;
    o.rank_mode = parse_rank_mode(rank_mode);
    o.allow_large = allow_large;
    o.vertex_limit = max_vertices;
    o.seed = seed;
    return o;
  }
};

json envelope(const std::string& command, json input, json metadata, json result) {
  json j;
  j["command"] = command;
  j["input"] = std::move(input);
  j["metadata"] = std::move(metadata);
  j["result"] = std::move(result);
  return j;
}

json table_json(const MultiplicityTable& t) {
  json arr = json::array();
  for (const auto& [lambda, m] : t.entries())
    arr.push_back({{"partition", lambda.to_string()}, {"multiplicity", m.str()}});
  return arr;
}

std::string csv_table(const MultiplicityTable& t) {
  std::ostringstream os;
  os << "partition,multiplicity\n";
  for (const auto& [lambda, m] : t.entries()) os << '"' << lambda.to_string() << "\"," << m << '\n';
  return os.str();
}

// ---------------------------------------------------------------- tableaux

int run_tableaux(const std::vector<std::string>& args, bool list, Format format) {
  if (args.empty()) throw std::invalid_argument("tableaux: missing quantity (f, hooks, kostka, syt, ssyt, char, partitions)");
  const std::string& what = args[0];
  auto need = [&](std::size_t count) {
    if (args.size() != count + 1)
      throw std::invalid_argument("tableaux " + what + " expects " + std::to_string(count) + " argument(s)");
  };
  json input = {{"quantity", what}, {"arguments", std::vector<std::string>(args.begin() + 1, args.end())}};
  json result;
  std::string text;

  auto tableau_list = [&](const std::vector<Tableau>& ts) {
    result = {{"count", std::to_string(ts.size())}};
    text = std::to_string(ts.size()) + "\n";
    if (list) {
      json arr = json::array();
      for (const auto& t : ts) {
        arr.push_back(t.rows());
        text += t.to_string() + "\n";
      }
      result["tableaux"] = std::move(arr);
    }
  };

  if (what == "f") {
    need(1);
    const auto v = f_syt(parse_partition(args[1]));
    result = {{"value", v.str()}};
    text = v.str() + "\n";
  } else if (what == "hooks") {
    need(1);
    const auto h = hook_lengths(parse_partition(args[1]));
    result = {{"rows", h.rows()}};
    for (const auto& row : h.rows()) {
      for (std::size_t c = 0; c < row.size(); ++c) text += (c ? " " : "") + std::to_string(row[c]);
      text += "\n";
    }
  } else if (what == "kostka") {
    need(2);
    const auto v = kostka(parse_partition(args[1]), parse_partition(args[2]));
    result = {{"value", v.str()}};
    text = v.str() + "\n";
  } else if (what == "syt") {
    need(1);
    tableau_list(enumerate_syt(parse_partition(args[1])));
  } else if (what == "ssyt") {
    need(2);
    tableau_list(enumerate_ssyt(parse_partition(args[1]), parse_partition(args[2])));
  } else if (what == "char") {
    need(2);
    const auto v = character(parse_partition(args[1]), ClassLabel{parse_partition(args[2])});
    result = {{"value", v.str()}};
    text = v.str() + "\n";
  } else if (what == "partitions") {
    need(1);
    const auto ps = partitions_of(std::stoi(args[1]));
    json arr = json::array();
    for (const auto& p : ps) {
      arr.push_back(p.to_string());
      text += p.to_string() + "\n";
    }
    result = {{"count", std::to_string(ps.size())}, {"partitions", arr}};
  } else {
    throw std::invalid_argument("tableaux: unknown quantity \"" + what + "\"");
  }

  if (format == Format::json)
    std::cout << envelope("tableaux", input, json::object(), result).dump(2) << '\n';
  else
    std::cout << text;
  return kExitOk;
}

// ---------------------------------------------------------------- csf

int run_csf(const GraphSource& source, const std::string& basis, std::optional<int> max_vertices, Format format) {
  const Graph g = source.load();
  CsfExpansion e = chromatic_symmetric_function(g, max_vertices.value_or(kDefaultCsfVertexLimit));
  if (basis == "schur") e = csf_to_schur(e);
  const std::string prefix = basis == "schur" ? "s_" : "m_";
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& [p, c] : e.coefficients) arr.push_back({{"partition", p.to_string()}, {"coefficient", c.str()}});
    json meta = {{"basis", basis}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
    std::cout << envelope("csf", source.describe(), meta, arr).dump(2) << '\n';
  } else if (format == Format::csv) {
    std::cout << "partition,coefficient\n";
    for (const auto& [p, c] : e.coefficients) std::cout << '"' << p.to_string() << "\"," << c << '\n';
  } else {
    for (const auto& [p, c] : e.coefficients) std::cout << prefix << '{' << p.to_string() << "}: " << c << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- homology

int run_homology(const GraphSource& source, int index, bool reverse_order, const Common& common) {
  const Graph g = source.load();
  HomologyOptions options = common.options();
  if (reverse_order) options.edge_order.assign(g.edges().rbegin(), g.edges().rend());
  if (index < 0 || index > g.edge_count())
    throw std::invalid_argument("-i must lie in 0.." + std::to_string(g.edge_count()));
  const HomologyResult h = homology_multiplicities(g, index, options);

  if (common.format == Format::json) {
    json per_shape = json::array();
    for (const auto& row : h.rows)
      per_shape.push_back({{"partition", row.lambda.to_string()},
                           {"chain_multiplicity", row.chain_multiplicity.str()},
                           {"image_multiplicity_d_i", std::to_string(row.rank_outgoing)},
                           {"image_multiplicity_d_i_plus_1", std::to_string(row.rank_incoming)}});
    json meta = {{"vertices", g.vertex_count()},
                 {"edges", g.edge_count()},
                 {"index", index},
                 {"chain_dimensions",
                  {{"previous", std::to_string(h.dim_previous)},
                   {"current", std::to_string(h.dim_current)},
                   {"next", std::to_string(h.dim_next)}}},
                 {"rank_mode", std::string(to_string(h.rank_mode))},
                 {"primes", {h.primes.first, h.primes.second}},
                 {"rank_runs",
                  {{"exact", h.rank_stats.exact_runs},
                   {"modular", h.rank_stats.modular_runs},
                   {"prime_disagreements", h.rank_stats.prime_disagreements}}},
                 {"seed", common.seed},
                 {"edge_order", reverse_order ? "reverse-lexicographic" : "lexicographic"},
                 {"isotypic", per_shape}};
    std::cout << envelope("homology", source.describe(), meta, table_json(h.table)).dump(2) << '\n';
  } else if (common.format == Format::csv) {
    std::cout << csv_table(h.table);
  } else {
    std::cout << "# H_{" << index << ",0}  n=" << g.vertex_count() << " edges=" << g.edge_count()
              << "  dim C_{i-1},C_i,C_{i+1} = " << h.dim_previous << "," << h.dim_current << "," << h.dim_next
              << "  rank-mode=" << to_string(h.rank_mode) << " primes=" << h.primes.first << ","
              << h.primes.second << '\n';
    std::cout << h.table.to_text();
  }
  return kExitOk;
}

// ---------------------------------------------------------------- predict

int run_predict(int n, Format format) {
  const MultiplicityTable t = predict_h10_star(n);
  if (format == Format::json) {
    json meta = {{"assumes_conjecture", true}, {"index", 1}};
    std::cout << envelope("predict", json{{"star", n}}, meta, table_json(t)).dump(2) << '\n';
  } else if (format == Format::csv) {
    std::cout << csv_table(t);
  } else {
    std::cout << "# predicted H_{1,0}(star(" << n << ")); assumes the vanishing conjecture\n" << t.to_text();
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

int run_verify(const std::string& suite, int max_n, const Common& common) {
  const HomologyOptions options = common.options();
  VerifyReport report{suite, {}, {}};
  if (suite == "table1" || suite == "all") report.append(verify_table1());
  if (suite == "table1-oracle" || suite == "all") report.append(verify_table1_oracle(max_n, options));
  if (suite == "cross" || suite == "all") report.append(verify_cross(max_n, options));
  if (suite == "conjecture" || suite == "all") report.append(verify_conjecture(max_n, options));

  if (common.format == Format::json) {
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    json findings = json::array();
    for (const auto& f : report.findings)
      findings.push_back({{"n", f.n},
                          {"index", f.violation.index},
                          {"partition", f.violation.lambda.to_string()},
                          {"multiplicity", f.violation.multiplicity.str()}});
    json meta = {{"max_n", max_n},
                 {"rank_mode", common.rank_mode},
                 {"seed", common.seed},
                 {"exit_code", report.exit_code()}};
    std::cout << envelope("verify", json{{"suite", suite}}, meta,
                          json{{"checks", checks}, {"conjecture_violations", findings}})
                     .dump(2)
              << '\n';
  } else {
    for (const auto& c : report.checks)
      std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    if (suite == "conjecture" || suite == "all") {
      std::cout << "conjecture violations: " << report.findings.size() << '\n';
      for (const auto& f : report.findings)
        std::cout << "  n=" << f.n << " i=" << f.violation.index << " " << f.violation.lambda.to_string()
                  << ": " << f.violation.multiplicity << '\n';
    }
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-0 chromatic symmetric homology of small graphs"};
  app.require_subcommand(1);

  Common common;

  auto* tab = app.add_subcommand("tableaux", "partitions, hooks, SYT/SSYT, Kostka numbers, characters");
  std::vector<std::string> tab_args;
  bool tab_list = false;
  tab->add_option("args", tab_args, "QUANTITY followed by partitions, e.g. 'f 3,2' or 'kostka 4,3,1 3,3,2'")
      ->required();
  tab->add_flag("--list", tab_list, "list the tableaux for syt/ssyt");
  common.add_format(tab);

  auto* csf = app.add_subcommand("csf", "chromatic symmetric function");
  GraphSource csf_src;
  std::string basis = "monomial";
  std::optional<int> csf_max;
  csf_src.add_to(csf);
  csf->add_option("--basis", basis)->check(CLI::IsMember({"monomial", "schur"}));
  csf->add_option("--max-vertices", csf_max, "override the vertex budget");
  common.add_format(csf);

  auto* hom = app.add_subcommand("homology", "Specht multiplicities of H_{i,0}(G)");
  GraphSource hom_src;
  int index = 1;
  bool reverse = false;
  hom_src.add_to(hom);
  hom->add_option("-i,--index", index, "homological index (default 1)");
  hom->add_flag("--reverse-edge-order", reverse, "sign the differentials with the reversed edge order");
  common.add_format(hom);
  common.add_rank(hom);

  auto* pred = app.add_subcommand("predict", "closed-form H_{1,0} of a star");
  int pred_n = 0;
  pred->add_option("--star", pred_n, "number of vertices")->required();
  common.add_format(pred);

  auto* ver = app.add_subcommand("verify", "reproduction and cross-check harness");
  std::string suite;
  int max_n = 6;
  ver->add_option("suite", suite, "table1 | table1-oracle | cross | conjecture | all")
      ->required()
      ->check(CLI::IsMember({"table1", "table1-oracle", "cross", "conjecture", "all"}));
  ver->add_option("--max-n", max_n, "largest star for oracle runs");
  common.add_format(ver);
  common.add_rank(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*tab) return run_tableaux(tab_args, tab_list, common.format);
    if (*csf) return run_csf(csf_src, basis, csf_max, common.format);
    if (*hom) return run_homology(hom_src, index, reverse, common);
    if (*pred) return run_predict(pred_n, common.format);
    if (*ver) return run_verify(suite, max_n, common);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

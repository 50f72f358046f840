#include "chromhom/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "chromhom/errors.hpp"

namespace chromhom {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
    if (u < 1 || v > n)
      throw std::invalid_argument("graph: edge " + std::to_string(u) + "-" + std::to_string(v) +
                                  " out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("graph: duplicate edge");
}

bool Graph::has_edge(Edge e) const {
  if (e.first > e.second) std::swap(e.first, e.second);
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("relabel: wrong size");
  std::vector<Edge> out;
  for (auto [u, v] : edges_)
    out.emplace_back(perm[static_cast<std::size_t>(u - 1)], perm[static_cast<std::size_t>(v - 1)]);
  return Graph(n_, std::move(out));
}

std::string Graph::to_text() const {
  std::ostringstream os;
  os << "n " << n_ << '\n';
  for (auto [u, v] : edges_) os << u << ' ' << v << '\n';
  return os.str();
}

Graph star(int n) {
  if (n < 2) throw std::invalid_argument("star graph needs at least 2 vertices");
  std::vector<Edge> edges;
  for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
  return Graph(n, std::move(edges));
}

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (n < 0) {
      if (first != "n" || !(ls >> n) || n < 0)
        throw ParseError("graph file must start with \"n <count>\"", lineno);
    } else {
      int u = 0, v = 0;
      std::istringstream fs(first);
      if (!(fs >> u) || !fs.eof() || !(ls >> v))
        throw ParseError("expected an edge \"u v\"", lineno);
      if (!(u >= 1 && u < v && v <= n))
        throw ParseError("edge must satisfy 1 <= u < v <= n", lineno);
      edges.emplace_back(u, v);
    }
    std::string extra;
    if (ls >> extra) throw ParseError("unexpected trailing token \"" + extra + "\"", lineno);
  }
  if (n < 0) throw ParseError("missing \"n <count>\" header", lineno);
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), lineno);
  }
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  return parse_graph(in);
}

SpanningSubgraph::SpanningSubgraph(const Graph& parent, std::vector<Edge> edge_subset)
    : n_(parent.vertex_count()), edges_(std::move(edge_subset)) {
  for (auto& e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (!parent.has_edge(e))
      throw std::invalid_argument("edge " + std::to_string(e.first) + "-" +
                                  std::to_string(e.second) + " is not in the parent graph");
  }
  auto sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate edge in subgraph");
  compute_components();
}

SpanningSubgraph::SpanningSubgraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  compute_components();
}

void SpanningSubgraph::compute_components() {
  std::vector<int> parent(static_cast<std::size_t>(n_ + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (auto [u, v] : edges_) {
    const int a = find(u), b = find(v);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(n_ + 1));
  for (int v = 1; v <= n_; ++v) groups[static_cast<std::size_t>(find(v))].push_back(v);
  components_.clear();
  for (auto& g : groups)
    if (!g.empty()) components_.push_back(std::move(g));
  std::stable_sort(components_.begin(), components_.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  component_of_.assign(static_cast<std::size_t>(n_), -1);
  std::vector<int> sizes;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    sizes.push_back(static_cast<int>(components_[c].size()));
    for (int v : components_[c]) component_of_[static_cast<std::size_t>(v - 1)] = static_cast<int>(c);
  }
  type_ = Partition(std::move(sizes));
}

bool SpanningSubgraph::contains(Edge e) const {
  if (e.first > e.second) std::swap(e.first, e.second);
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

Tableau SpanningSubgraph::canonical_tableau() const { return Tableau(type_, components_); }

SpanningSubgraph SpanningSubgraph::without(Edge e) const {
  if (e.first > e.second) std::swap(e.first, e.second);
  auto it = std::find(edges_.begin(), edges_.end(), e);
  if (it == edges_.end()) throw std::invalid_argument("edge is not in the subgraph");
  std::vector<Edge> rest = edges_;
  rest.erase(rest.begin() + (it - edges_.begin()));
  return SpanningSubgraph(n_, std::move(rest));
}

std::vector<SpanningSubgraph> spanning_subgraphs(const Graph& g, int i,
                                                 const std::vector<Edge>& edge_order) {
  const int m = static_cast<int>(edge_order.size());
  if (i < 0 || i > m) throw std::invalid_argument("spanning_subgraphs: size out of range");
  std::vector<SpanningSubgraph> out;
  std::vector<int> pick(static_cast<std::size_t>(i));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<Edge> subset;
    for (int p : pick) subset.push_back(edge_order[static_cast<std::size_t>(p)]);
    out.emplace_back(g, std::move(subset));
    int j = i - 1;
    while (j >= 0 && pick[static_cast<std::size_t>(j)] == m - i + j) --j;
    if (j < 0) break;
    ++pick[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < i; ++t) pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

std::vector<SpanningSubgraph> spanning_subgraphs(const Graph& g, int i) {
  return spanning_subgraphs(g, i, g.edges());
}

}  // namespace chromhom

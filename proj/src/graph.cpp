#include "graphon/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace graphon {

bool SampledGraph::has_edge(int i, int j) const {
  return std::binary_search(adj[i].begin(), adj[i].end(), j);
}

int SampledGraph::min_degree() const {
  int best = n == 0 ? 0 : static_cast<int>(adj[0].size());
  for (const auto& nbrs : adj) best = std::min(best, static_cast<int>(nbrs.size()));
  return best;
}

std::vector<std::pair<int, int>> SampledGraph::edge_list() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(edge_count));
  for (int i = 0; i < n; ++i)
    for (int j : adj[i])
      if (i < j) edges.emplace_back(i, j);
  return edges;
}

SampledGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("negative node count");
  SampledGraph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loop not allowed in a sampled graph");
    g.adj[a].push_back(b);
    g.adj[b].push_back(a);
  }
  for (auto& nbrs : g.adj) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw std::invalid_argument("duplicate edge");
  }
  g.edge_count = static_cast<std::int64_t>(edges.size());
  return g;
}

SampledGraph build_complete_partite(const SkeletonGraph& s, const std::vector<std::int64_t>& y) {
  if (static_cast<int>(y.size()) != s.q) throw std::invalid_argument("community size vector mismatch");
  std::int64_t total = 0;
  for (auto c : y) {
    if (c < 0) throw std::invalid_argument("negative community size");
    total += c;
  }
  if (total < 1) throw std::invalid_argument("complete partite graph needs at least one node");

  SampledGraph g;
  g.n = static_cast<int>(total);
  g.community.reserve(g.n);
  std::vector<int> first(s.q);
  for (int c = 0; c < s.q; ++c) {
    first[c] = static_cast<int>(g.community.size());
    for (std::int64_t t = 0; t < y[c]; ++t) g.community.push_back(c);
  }
  g.adj.assign(g.n, {});
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (s.has_edge(g.community[i], g.community[j])) {
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
        ++g.edge_count;
      }
  return g;
}

std::vector<std::int64_t> community_sizes(const SampledGraph& g, int q) {
  std::vector<std::int64_t> y(q, 0);
  for (int c : g.community) {
    if (c < 0 || c >= q) throw std::invalid_argument("community label out of range");
    ++y[c];
  }
  return y;
}

bool is_s_partite(const SampledGraph& g, const SkeletonGraph& s) {
  if (static_cast<int>(g.community.size()) != g.n) return false;
  for (int i = 0; i < g.n; ++i)
    for (int j : g.adj[i])
      if (i < j && !s.has_edge(g.community[i], g.community[j])) return false;
  return true;
}

SampledGraph read_edge_list(std::istream& in) {
  int n = 0;
  std::int64_t m = 0;
  if (!(in >> n >> m)) throw std::runtime_error("edge list: missing 'n m' header");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t e = 0; e < m; ++e) {
    int a = 0, b = 0;
    if (!(in >> a >> b)) throw std::runtime_error("edge list: expected " + std::to_string(m) + " edges");
    edges.emplace_back(a, b);
  }
  try {
    return graph_from_edges(n, edges);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("edge list: ") + e.what());
  }
}

void write_edge_list(const SampledGraph& g, std::ostream& out) {
  out << g.n << ' ' << g.edge_count << '\n';
  for (int i = 0; i < g.n; ++i)
    for (int j : g.adj[i])
      if (i < j) out << i << ' ' << j << '\n';
}

}  // namespace graphon

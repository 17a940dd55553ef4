#include "graphon/two_factor.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace graphon {

const char* to_string(DecisionMethod m) {
  switch (m) {
    case DecisionMethod::DegreePrecheck: return "DegreePrecheck";
    case DecisionMethod::ConeNecessity: return "ConeNecessity";
    case DecisionMethod::LemmaKySufficiency: return "LemmaKySufficiency";
    case DecisionMethod::ExactMatching: return "ExactMatching";
    case DecisionMethod::Oracle: return "Oracle";
  }
  return "?";
}

GadgetGraph build_tutte_gadget(const SampledGraph& g) {
  if (g.n > 0 && g.min_degree() < 2)
    throw std::invalid_argument("tutte gadget requires minimum degree 2");

  GadgetGraph gadget;
  gadget.original_edges = g.edge_list();

  // Per-vertex node blocks: externals first (one per incident edge, in
  // neighbor order), then the d-2 internals.
  std::vector<int> ext_offset(g.n), int_offset(g.n);
  int next = 0;
  for (int v = 0; v < g.n; ++v) {
    ext_offset[v] = next;
    next += static_cast<int>(g.adj[v].size());
  }
  for (int v = 0; v < g.n; ++v) {
    int_offset[v] = next;
    next += static_cast<int>(g.adj[v].size()) - 2;
  }
  gadget.node_count = next;

  for (int v = 0; v < g.n; ++v) {
    const int d = static_cast<int>(g.adj[v].size());
    for (int i = 0; i < d - 2; ++i)
      for (int e = 0; e < d; ++e) {
        gadget.edges.emplace_back(int_offset[v] + i, ext_offset[v] + e);
        gadget.back_map.push_back(-1);
      }
  }
  const auto external_of = [&](int v, int other) {
    const auto it = std::lower_bound(g.adj[v].begin(), g.adj[v].end(), other);
    return ext_offset[v] + static_cast<int>(it - g.adj[v].begin());
  };
  for (std::size_t m = 0; m < gadget.original_edges.size(); ++m) {
    auto [a, b] = gadget.original_edges[m];
    gadget.edges.emplace_back(external_of(a, b), external_of(b, a));
    gadget.back_map.push_back(static_cast<int>(m));
  }
  return gadget;
}

PartiteDecision decide_complete_partite(const SkeletonGraph& s, const std::vector<std::int64_t>& y) {
  if (static_cast<int>(y.size()) != s.q) throw std::invalid_argument("community size vector mismatch");
  std::int64_t total = 0;
  for (auto c : y) {
    if (c < 0) throw std::invalid_argument("negative community size");
    total += c;
  }
  if (total < 1) throw std::invalid_argument("decide_complete_partite needs at least one node");
  if (total <= 2) return PartiteDecision::No;

  std::vector<int> nonempty;
  for (int i = 0; i < s.q; ++i)
    if (y[i] > 0) nonempty.push_back(i);

  for (int i : nonempty) {
    if (y[i] != 1) continue;
    bool populated_neighbor = false;
    for (int j : nonempty)
      if (j != i && s.has_edge(i, j)) {
        populated_neighbor = true;
        break;
      }
    if (!populated_neighbor) return PartiteDecision::No;  // isolated singleton
  }

  // Cone test on the sub-skeleton of populated communities; any certificate
  // for the full y puts zero mass on edges into empty communities anyway.
  const SkeletonGraph sub = induced_subskeleton(s, nonempty);
  std::vector<Rational> y_sub;
  y_sub.reserve(nonempty.size());
  std::int64_t min_size = y[nonempty.front()];
  for (int i : nonempty) {
    y_sub.emplace_back(y[i]);
    min_size = std::min(min_size, y[i]);
  }
  if (cone_membership(incidence_matrix(sub), y_sub).verdict == Verdict::Outside)
    return PartiteDecision::No;
  if (min_size >= 3) return PartiteDecision::Yes;
  return PartiteDecision::Unknown;
}

namespace {

std::vector<std::vector<int>> cycles_from_selected(int n, const std::vector<std::pair<int, int>>& selected) {
  std::vector<std::array<int, 2>> link(n, {-1, -1});
  for (auto [a, b] : selected) {
    link[a][link[a][0] == -1 ? 0 : 1] = b;
    link[b][link[b][0] == -1 ? 0 : 1] = a;
  }
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(n, false);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    int prev = -1, cur = start;
    do {
      cycle.push_back(cur);
      seen[cur] = true;
      const int nxt = link[cur][0] == prev ? link[cur][1] : link[cur][0];
      prev = cur;
      cur = nxt;
    } while (cur != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

CycleCoverVerdict exact_two_factor(const SampledGraph& g, bool want_witness) {
  const GadgetGraph gadget = build_tutte_gadget(g);
  const Matching matching = max_matching(gadget.node_count, gadget.edges);

  CycleCoverVerdict verdict;
  verdict.method = DecisionMethod::ExactMatching;
  verdict.exists = matching.perfect(gadget.node_count);
  if (verdict.exists && want_witness) {
    std::vector<std::pair<int, int>> selected;
    for (std::size_t e = 0; e < gadget.edges.size(); ++e) {
      if (gadget.back_map[e] < 0) continue;
      auto [u, v] = gadget.edges[e];
      if (matching.mate[u] == v) selected.push_back(gadget.original_edges[gadget.back_map[e]]);
    }
    verdict.witness = cycles_from_selected(g.n, selected);
  }
  return verdict;
}

}  // namespace

CycleCoverVerdict has_cycle_cover(const SampledGraph& g, const SkeletonContext* context,
                                  bool want_witness) {
  CycleCoverVerdict verdict;
  if (g.n < 3 || g.min_degree() < 2) {
    verdict.exists = false;
    verdict.method = DecisionMethod::DegreePrecheck;
    return verdict;
  }
  if (context != nullptr && context->zero_one_blocks && context->skeleton != nullptr &&
      static_cast<int>(g.community.size()) == g.n && !want_witness) {
    const std::vector<std::int64_t> y = community_sizes(g, context->skeleton->q);
    switch (decide_complete_partite(*context->skeleton, y)) {
      case PartiteDecision::Yes:
        verdict.exists = true;
        verdict.method = DecisionMethod::LemmaKySufficiency;
        return verdict;
      case PartiteDecision::No:
        verdict.exists = false;
        verdict.method = DecisionMethod::ConeNecessity;
        return verdict;
      case PartiteDecision::Unknown:
        break;
    }
  }
  return exact_two_factor(g, want_witness);
}

bool brute_force_two_factor(const SampledGraph& g) {
  if (g.n > 12) throw std::invalid_argument("brute force oracle limited to 12 nodes");
  if (g.n < 3) return false;

  std::vector<int> chosen_degree(g.n, 0);
  std::vector<std::vector<int>> later(g.n);
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v])
      if (u > v) later[v].push_back(u);

  // At vertex v every edge to a smaller vertex is already decided, so pick
  // exactly the missing incident edges among the later neighbors.
  const auto solve = [&](auto&& self, int v) -> bool {
    if (v == g.n) return true;
    const int need = 2 - chosen_degree[v];
    if (need < 0) return false;
    std::vector<int> candidates;
    for (int u : later[v])
      if (chosen_degree[u] < 2) candidates.push_back(u);
    const int c = static_cast<int>(candidates.size());
    if (c < need) return false;
    if (need == 0) return self(self, v + 1);

    std::vector<int> pick(need);
    const auto choose = [&](auto&& rec, int start, int depth) -> bool {
      if (depth == need) {
        for (int i = 0; i < need; ++i) ++chosen_degree[pick[i]];
        const bool ok = self(self, v + 1);
        for (int i = 0; i < need; ++i) --chosen_degree[pick[i]];
        return ok;
      }
      for (int i = start; i < c; ++i) {
        pick[depth] = candidates[i];
        if (rec(rec, i + 1, depth + 1)) return true;
      }
      return false;
    };
    return choose(choose, 0, 0);
  };
  return solve(solve, 0);
}

bool valid_cycle_cover(const SampledGraph& g, const std::vector<std::vector<int>>& cycles) {
  std::vector<bool> covered(g.n, false);
  for (const auto& cycle : cycles) {
    if (cycle.size() < 3) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int a = cycle[i];
      const int b = cycle[(i + 1) % cycle.size()];
      if (a < 0 || a >= g.n || covered[a]) return false;
      covered[a] = true;
      if (!g.has_edge(a, b)) return false;
    }
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

}  // namespace graphon

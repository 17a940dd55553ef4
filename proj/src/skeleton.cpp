#include "graphon/skeleton.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphon {

SkeletonGraph make_skeleton(int q, const std::vector<std::pair<int, int>>& edges) {
  if (q < 1) throw std::invalid_argument("skeleton needs at least one node");
  SkeletonGraph s;
  s.q = q;
  s.adjacency.assign(q, std::vector<bool>(q, false));
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= q || b >= q) throw std::invalid_argument("skeleton edge endpoint out of range");
    if (a > b) std::swap(a, b);
    if (!s.adjacency[a][b]) {
      s.adjacency[a][b] = s.adjacency[b][a] = true;
      s.edges.emplace_back(a, b);
    }
  }
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

bool has_odd_cycle(const SkeletonGraph& s) {
  for (int i = 0; i < s.q; ++i)
    if (s.has_loop(i)) return true;

  // 2-coloring; any inconsistency means a non-bipartite component.
  std::vector<int> color(s.q, -1);
  std::vector<int> stack;
  for (int start = 0; start < s.q; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    stack.push_back(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < s.q; ++w) {
        if (w == v || !s.adjacency[v][w]) continue;
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return true;
        }
      }
    }
  }
  return false;
}

bool is_connected(const SkeletonGraph& s) {
  if (s.q <= 1) return true;
  std::vector<bool> seen(s.q, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < s.q; ++w) {
      if (w != v && s.adjacency[v][w] && !seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == s.q;
}

SkeletonGraph induced_subskeleton(const SkeletonGraph& s, const std::vector<int>& keep) {
  std::vector<int> position(s.q, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : s.edges)
    if (position[a] >= 0 && position[b] >= 0) edges.emplace_back(position[a], position[b]);
  return make_skeleton(static_cast<int>(keep.size()), edges);
}

}  // namespace graphon

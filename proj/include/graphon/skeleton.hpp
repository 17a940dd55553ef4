#pragma once

#include <utility>
#include <vector>

namespace graphon {

// Support pattern of a step-graphon: an undirected graph on the q communities,
// self-loops allowed. Edges are kept in canonical order, lexicographic by
// (min, max) endpoint, which fixes the column order of the incidence matrix.
struct SkeletonGraph {
  int q = 0;
  std::vector<std::pair<int, int>> edges;  // (i, j) with i <= j, 0-based
  std::vector<std::vector<bool>> adjacency;

  bool has_edge(int i, int j) const { return adjacency[i][j]; }
  bool has_loop(int i) const { return adjacency[i][i]; }
};

// Builds a skeleton from an edge list; edges are normalized, deduplicated and
// sorted into canonical order. Throws on out-of-range endpoints.
SkeletonGraph make_skeleton(int q, const std::vector<std::pair<int, int>>& edges);

// True iff the skeleton has a self-loop or a non-bipartite component.
// A self-loop counts as an odd cycle of length 1.
bool has_odd_cycle(const SkeletonGraph& s);

// Connectivity of the underlying simple graph; self-loops are irrelevant.
// A one-node skeleton is connected.
bool is_connected(const SkeletonGraph& s);

// Sub-skeleton on the given nodes (indices into 0..q-1, strictly increasing);
// keeps loops and edges with both endpoints retained.
SkeletonGraph induced_subskeleton(const SkeletonGraph& s, const std::vector<int>& keep);

}  // namespace graphon

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "graphon/skeleton.hpp"

namespace graphon {

// Simple undirected graph, optionally with a community label per node
// (0-based; empty when the graph did not come from a sampler).
struct SampledGraph {
  int n = 0;
  std::vector<int> community;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists
  std::int64_t edge_count = 0;

  bool has_edge(int i, int j) const;
  int min_degree() const;
  std::vector<std::pair<int, int>> edge_list() const;  // i < j, lexicographic
};

SampledGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Complete S-partite graph with community sizes y: an edge between distinct
// nodes iff their communities are adjacent in S (same community needs a loop).
SampledGraph build_complete_partite(const SkeletonGraph& s, const std::vector<std::int64_t>& y);

// Community counts; y_i = number of nodes labeled i.
std::vector<std::int64_t> community_sizes(const SampledGraph& g, int q);

// True iff the labeling is a graph homomorphism into S.
bool is_s_partite(const SampledGraph& g, const SkeletonGraph& s);

// Edge-list format: first line "n m", then m lines "i j" with 0-based
// endpoints. Rejects self-loops, duplicates and out-of-range endpoints.
SampledGraph read_edge_list(std::istream& in);
void write_edge_list(const SampledGraph& g, std::ostream& out);

}  // namespace graphon

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphon/cone.hpp"
#include "graphon/graph.hpp"
#include "graphon/matching.hpp"
#include "graphon/skeleton.hpp"

namespace graphon {

// Reduction of 2-factor existence to perfect matching. Each vertex v of
// degree d contributes d external nodes (one per incident edge) and d-2
// internal nodes joined to all of v's externals; each original edge becomes
// one inter-vertex edge between its two externals. The gadget has a perfect
// matching iff the original graph has a 2-factor, and 4|E| - 2|V| nodes.
struct GadgetGraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> back_map;  // gadget edge -> original edge index, -1 for intra-vertex
  std::vector<std::pair<int, int>> original_edges;
};

// Requires minimum degree 2 (callers dispose of smaller degrees first).
GadgetGraph build_tutte_gadget(const SampledGraph& g);

enum class DecisionMethod { DegreePrecheck, ConeNecessity, LemmaKySufficiency, ExactMatching, Oracle };
const char* to_string(DecisionMethod m);

struct CycleCoverVerdict {
  bool exists = false;
  DecisionMethod method = DecisionMethod::ExactMatching;
  std::optional<std::vector<std::vector<int>>> witness;  // node-disjoint cycles covering V
};

enum class PartiteDecision { Yes, No, Unknown };

// Combinatorial fast path for complete S-partite graphs K_y, decided from the
// community sizes alone:
//   No   if y is outside the edge cone, or sum(y) <= 2, or a singleton
//        community has no populated neighbor;
//   Yes  if y is in the cone and every nonempty community has y_i >= 3
//        (cone test on the sub-skeleton induced by nonempty communities);
//   Unknown otherwise -- callers fall back to exact matching.
PartiteDecision decide_complete_partite(const SkeletonGraph& s, const std::vector<std::int64_t>& y);

struct SkeletonContext {
  const SkeletonGraph* skeleton = nullptr;
  bool zero_one_blocks = false;  // sampled graph is exactly K_y given its labels
};

// Layered decision: (1) n < 3 or min degree < 2 is an immediate no;
// (2) with zero-one context, decide_complete_partite on the label counts;
// (3) exact Tutte-gadget matching, with witness cycles recovered from the
// matched inter-vertex edges when requested (witness forces the exact path).
CycleCoverVerdict has_cycle_cover(const SampledGraph& g, const SkeletonContext* context = nullptr,
                                  bool want_witness = false);

// Exhaustive oracle for |V| <= 12: backtracking over per-vertex choices of
// exactly two incident edges.
bool brute_force_two_factor(const SampledGraph& g);

// Test help: witness cycles are node-disjoint, cover V, have length >= 3 and
// use only edges of g.
bool valid_cycle_cover(const SampledGraph& g, const std::vector<std::vector<int>>& cycles);

}  // namespace graphon

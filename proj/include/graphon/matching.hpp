#pragma once

#include <utility>
#include <vector>

namespace graphon {

struct Matching {
  std::vector<int> mate;  // mate[v] = matched partner or -1
  int size = 0;           // number of matched pairs

  bool perfect(int n) const { return 2 * size == n; }
};

// Maximum-cardinality matching in a general graph: Edmonds' blossom
// algorithm with greedy initialization. Optimality follows from the absence
// of augmenting paths when the search stops. Deterministic.
Matching max_matching(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace graphon

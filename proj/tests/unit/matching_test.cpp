#include <doctest.h>

#include <algorithm>

#include "graphon/matching.hpp"
#include "graphon/rng.hpp"

using namespace graphon;

namespace {

// Independent oracle: exhaustive max matching over the edge list.
int brute_matching(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<bool> used(n, false);
  const auto rec = [&](auto&& self, std::size_t idx) -> int {
    if (idx == edges.size()) return 0;
    int best = self(self, idx + 1);
    auto [a, b] = edges[idx];
    if (!used[a] && !used[b]) {
      used[a] = used[b] = true;
      best = std::max(best, 1 + self(self, idx + 1));
      used[a] = used[b] = false;
    }
    return best;
  };
  return rec(rec, 0);
}

void check_valid(int n, const std::vector<std::pair<int, int>>& edges, const Matching& m) {
  int count = 0;
  for (int v = 0; v < n; ++v) {
    if (m.mate[v] == -1) continue;
    REQUIRE(m.mate[m.mate[v]] == v);
    if (v < m.mate[v]) {
      ++count;
      const bool present =
          std::any_of(edges.begin(), edges.end(), [&](const std::pair<int, int>& e) {
            return (e.first == v && e.second == m.mate[v]) || (e.second == v && e.first == m.mate[v]);
          });
      REQUIRE(present);
    }
  }
  CHECK(count == m.size);
}

std::vector<std::pair<int, int>> petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);        // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);              // spokes
  }
  return edges;
}

}  // namespace

TEST_CASE("small matchings") {
  const std::vector<std::pair<int, int>> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  CHECK(max_matching(5, c5).size == 2);

  const std::vector<std::pair<int, int>> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  CHECK(max_matching(4, k4).size == 2);

  CHECK(max_matching(10, petersen()).size == 5);
  CHECK(max_matching(10, petersen()).perfect(10));
}

TEST_CASE("blossom-heavy cases") {
  // Two triangles joined by a bridge: perfect matching on 6 nodes.
  const std::vector<std::pair<int, int>> bowtie{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}};
  CHECK(max_matching(6, bowtie).size == 3);

  // Odd star of triangles: forces contraction.
  const std::vector<std::pair<int, int>> flower{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}};
  CHECK(max_matching(5, flower).size == 2);
}

TEST_CASE("matching agrees with the exhaustive oracle on random graphs") {
  RngStream rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng.next_u64() % 7);  // 4..10
    const double p = 0.15 + 0.1 * static_cast<double>(trial % 7);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.next_unit() < p) edges.emplace_back(i, j);
    const Matching m = max_matching(n, edges);
    check_valid(n, edges, m);
    REQUIRE(m.size == brute_matching(n, edges));
  }
}

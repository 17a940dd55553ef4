#include <doctest.h>

#include <algorithm>

#include "graphon/catalog.hpp"
#include "graphon/rng.hpp"
#include "graphon/step_graphon.hpp"
#include "graphon/two_factor.hpp"

using namespace graphon;

namespace {

SampledGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return graph_from_edges(n, edges);
}

SampledGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return graph_from_edges(n, edges);
}

SampledGraph petersen_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return graph_from_edges(10, edges);
}

SampledGraph random_graph(int n, double p, RngStream& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_unit() < p) edges.emplace_back(i, j);
  return graph_from_edges(n, edges);
}

}  // namespace

TEST_CASE("gadget shape") {
  const GadgetGraph c4 = build_tutte_gadget(cycle_graph(4));
  CHECK(c4.node_count == 8);  // 4|E| - 2|V| with degree 2 everywhere
  CHECK(c4.edges.size() == 4);

  const GadgetGraph k4 = build_tutte_gadget(complete_graph(4));
  CHECK(k4.node_count == 16);

  const GadgetGraph k3 = build_tutte_gadget(complete_graph(3));
  CHECK(k3.node_count == 6);
  CHECK(k3.edges.size() == 3);

  CHECK_THROWS_AS(build_tutte_gadget(graph_from_edges(3, {{0, 1}, {1, 2}})), std::invalid_argument);
}

TEST_CASE("layered cycle-cover decisions") {
  CHECK(has_cycle_cover(complete_graph(3)).exists);
  const CycleCoverVerdict path3 = has_cycle_cover(graph_from_edges(3, {{0, 1}, {1, 2}}));
  CHECK(!path3.exists);
  CHECK(path3.method == DecisionMethod::DegreePrecheck);

  // K_{2,3}: only even cycles are available and 5 nodes cannot split into them.
  const SampledGraph k23 = build_complete_partite(make_skeleton(2, {{0, 1}}), {2, 3});
  CHECK(!has_cycle_cover(k23).exists);

  // Two disjoint triangles, with witness.
  const SampledGraph two_triangles =
      graph_from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const CycleCoverVerdict v = has_cycle_cover(two_triangles, nullptr, true);
  REQUIRE(v.exists);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->size() == 2);
  CHECK(valid_cycle_cover(two_triangles, *v.witness));
}

TEST_CASE("brute force oracle basics") {
  CHECK(brute_force_two_factor(cycle_graph(4)));
  CHECK(!brute_force_two_factor(graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}})));
  CHECK(brute_force_two_factor(petersen_graph()));
  CHECK(has_cycle_cover(petersen_graph()).exists);
  CHECK_THROWS_AS(brute_force_two_factor(complete_graph(13)), std::invalid_argument);
}

TEST_CASE("decide_complete_partite edge cases") {
  const SkeletonGraph fam = skeleton_graph(catalog("a"));
  CHECK(decide_complete_partite(fam, {3, 3, 3}) == PartiteDecision::Yes);

  const SkeletonGraph edge = make_skeleton(2, {{0, 1}});
  CHECK(decide_complete_partite(edge, {3, 5}) == PartiteDecision::No);
  CHECK(decide_complete_partite(edge, {2, 2}) == PartiteDecision::Unknown);
  CHECK(has_cycle_cover(build_complete_partite(edge, {2, 2})).exists);  // K_{2,2} is C4

  CHECK(decide_complete_partite(edge, {1, 1}) == PartiteDecision::No);  // sum <= 2
  // Isolated singleton: community 0 populated by one node, no populated neighbor.
  const SkeletonGraph loops = make_skeleton(2, {{0, 0}, {1, 1}});
  CHECK(decide_complete_partite(loops, {1, 4}) == PartiteDecision::No);
  // Empty communities drop out of the sufficiency test.
  CHECK(decide_complete_partite(fam, {0, 3, 3}) == PartiteDecision::Yes);
}

TEST_CASE("zero-one context routes through the fast path") {
  const StepGraphon w = catalog("a");
  const SkeletonGraph s = skeleton_graph(w);
  const SkeletonContext ctx{&s, true};

  SampledGraph ky = build_complete_partite(s, {4, 3, 3});
  const CycleCoverVerdict fast = has_cycle_cover(ky, &ctx);
  CHECK(fast.exists);
  CHECK(fast.method == DecisionMethod::LemmaKySufficiency);

  // Outside the cone: second community too heavy.
  SampledGraph heavy = build_complete_partite(s, {1, 14, 1});
  const CycleCoverVerdict no = has_cycle_cover(heavy, &ctx);
  CHECK(!no.exists);
  CHECK(no.method == DecisionMethod::ConeNecessity);
  CHECK(!has_cycle_cover(heavy).exists);  // exact path agrees
}

TEST_CASE("oracle equivalence on all connected graphs up to 6 nodes") {
  // Exhaustive over labeled graphs; small enough to brute force directly.
  for (int n = 3; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) all_pairs.emplace_back(i, j);
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (int b = 0; b < pairs; ++b)
        if (mask & (1u << b)) edges.push_back(all_pairs[b]);
      if (edges.size() < static_cast<std::size_t>(n)) continue;  // a 2-factor needs >= n edges
      const SampledGraph g = graph_from_edges(n, edges);
      if (g.min_degree() < 2) continue;
      REQUIRE(has_cycle_cover(g).exists == brute_force_two_factor(g));
    }
  }
}

TEST_CASE("oracle equivalence on random graphs with 7-12 nodes") {
  RngStream rng(20240);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 7 + static_cast<int>(rng.next_u64() % 6);
    const double p = 0.2 + 0.1 * static_cast<double>(trial % 6);
    const SampledGraph g = random_graph(n, p, rng);
    REQUIRE(has_cycle_cover(g).exists == brute_force_two_factor(g));
  }
}

TEST_CASE("witnesses are valid cycle covers") {
  RngStream rng(555);
  int witnessed = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const SampledGraph g = random_graph(8 + static_cast<int>(rng.next_u64() % 4), 0.5, rng);
    const CycleCoverVerdict v = has_cycle_cover(g, nullptr, true);
    if (v.exists) {
      ++witnessed;
      REQUIRE(v.witness.has_value());
      REQUIRE(valid_cycle_cover(g, *v.witness));
    }
  }
  CHECK(witnessed > 20);
}

TEST_CASE("fast path soundness against exact matching on small counts") {
  for (const char* name : {"fig1", "a", "j"}) {
    const SkeletonGraph s = skeleton_graph(catalog(name));
    std::vector<std::int64_t> y(s.q, 0);
    const auto visit = [&](auto&& self, int pos) -> void {
      if (pos == s.q) {
        std::int64_t total = 0;
        for (auto c : y) total += c;
        if (total < 1) return;
        const PartiteDecision d = decide_complete_partite(s, y);
        if (d == PartiteDecision::Unknown) return;
        const SampledGraph ky = build_complete_partite(s, y);
        REQUIRE((d == PartiteDecision::Yes) == has_cycle_cover(ky).exists);
        return;
      }
      for (std::int64_t v = 0; v <= 6; ++v) {
        y[pos] = v;
        self(self, pos + 1);
      }
    };
    visit(visit, 0);
  }
}

TEST_CASE("fast path soundness spot-checked on the six-community skeleton") {
  const SkeletonGraph s = skeleton_graph(catalog("k"));
  RngStream rng(808);
  int decided = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::int64_t> y(s.q);
    for (auto& v : y) v = static_cast<std::int64_t>(rng.next_u64() % 7);
    std::int64_t total = 0;
    for (auto v : y) total += v;
    if (total < 1) continue;
    const PartiteDecision d = decide_complete_partite(s, y);
    if (d == PartiteDecision::Unknown) continue;
    ++decided;
    REQUIRE((d == PartiteDecision::Yes) == has_cycle_cover(build_complete_partite(s, y)).exists);
  }
  CHECK(decided > 100);
}

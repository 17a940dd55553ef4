#pragma once

#include <cstdint>
#include <vector>

#include "graphon/graph.hpp"
#include "graphon/rng.hpp"
#include "graphon/step_graphon.hpp"

namespace graphon {

// Inverse-CDF categorical draw decided exactly: the 53-bit uniform m / 2^53
// is compared against rational cumulative weights with integer arithmetic,
// so community boundaries carry no rounding bias. Weights must be
// nonnegative rationals with a positive sum.
class CategoricalSampler {
 public:
  explicit CategoricalSampler(const std::vector<Rational>& weights);

  int draw(RngStream& rng) const;
  int size() const { return static_cast<int>(thresholds_.size()); }

 private:
  // Category i wins iff m * D < K_i * 2^53 and no earlier category did,
  // where K_i / D is the normalized cumulative weight.
  std::vector<unsigned __int128> thresholds_;  // K_i << 53
  std::uint64_t common_denominator_ = 1;
  bool exact_fallback_ = false;
  std::vector<Rational> cumulative_;  // used only when D overflows 64 bits
};

// Exact Bernoulli(p) for rational p in [0,1], same dyadic comparison.
bool bernoulli_exact(const Rational& p, RngStream& rng);

// Multinomial(n, x*) community counts via n categorical draws.
std::vector<std::int64_t> sample_community_sizes(const std::vector<Rational>& xstar,
                                                 std::int64_t n, RngStream& rng);

// Per-node community labels; counting them reproduces sample_community_sizes
// on the same stream.
std::vector<int> sample_community_labels(const std::vector<Rational>& xstar, std::int64_t n,
                                         RngStream& rng);

// Two-step sampler: labels first, then one uniform per unordered node pair
// (i < j, lexicographic) compared against the block value. With 0/1 block
// values the result equals build_complete_partite of the label counts.
SampledGraph sample_graph(const StepGraphon& w, std::int64_t n, RngStream& rng);

}  // namespace graphon

#pragma once

#include <cstdint>
#include <string>

#include "graphon/step_graphon.hpp"

namespace graphon {

struct PStarEstimate {
  double mean = 0;        // in [0, 1]
  double stderr_ = 0;     // sqrt(mean (1 - mean) / samples); 0 when analytic
  std::int64_t samples = 0;
  bool analytic = false;  // true when no sampling was needed
  std::string note;
};

// Monte-Carlo estimate of p* = P(omega* in Omega*) for graphons whose
// concentration vector sits on the cone boundary (regime Item4). Shortcuts:
// Item1 returns 1 (empty active set, Omega* is the whole hyperplane), Item3
// returns 0 (degenerate cone, Omega* has measure zero). Item2 throws:
// Omega* is undefined when x* is outside the edge cone.
//
// Deterministic for a fixed master seed regardless of thread count: samples
// are split into fixed shards with per-shard derived streams.
PStarEstimate estimate_p_star(const StepGraphon& w, std::int64_t num_samples,
                              std::uint64_t master_seed, int threads = 1);

// Stable 64-bit label for seed derivation (FNV-1a of the name).
std::uint64_t graphon_label(const std::string& name);

}  // namespace graphon

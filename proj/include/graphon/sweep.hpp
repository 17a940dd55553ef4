#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphon/step_graphon.hpp"

namespace graphon {

struct TrialBatch {
  std::int64_t n = 0;
  std::int64_t trials = 0;
  std::int64_t successes = 0;
  double p_hat = 0;
  double stderr_ = 0;

  // Saturated batches have an undefined log transform and are excluded from
  // downstream fits.
  bool saturated() const { return successes == 0 || successes == trials; }
};

struct SweepConfig {
  StepGraphon graphon;
  std::vector<std::int64_t> n_list;  // strictly increasing
  std::int64_t trials = 20000;
  std::uint64_t master_seed = 42;
  int threads = 1;
  std::string out_dir;
  bool log_progress = true;  // one line per n on stderr
};

// Fraction of sampled graphs with a cycle cover. Per-trial streams are
// derived from (graphon label, n, trial index), so the result is independent
// of sharding and thread count. Graphons with 0/1 block values sample only
// the community counts and decide on K_y, falling back to exact matching on
// the rare undecided counts; other graphons run the exact detector per trial.
TrialBatch empirical_probability(const StepGraphon& w, std::int64_t n, std::int64_t trials,
                                 std::uint64_t master_seed, int threads = 1);

std::vector<TrialBatch> run_sweep(const SweepConfig& config);

}  // namespace graphon

#include "graphon/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "graphon/pstar.hpp"
#include "graphon/rng.hpp"
#include "graphon/sampling.hpp"
#include "graphon/two_factor.hpp"

namespace graphon {

namespace {

constexpr int kShards = 256;

struct VectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (auto e : v) h = splitmix64_mix(h ^ static_cast<std::uint64_t>(e));
    return static_cast<std::size_t>(h);
  }
};

bool all_zero_one(const StepGraphon& w) {
  for (const auto& row : w.values)
    for (const auto& v : row)
      if (v != 0 && v != 1) return false;
  return true;
}

}  // namespace

TrialBatch empirical_probability(const StepGraphon& w, std::int64_t n, std::int64_t trials,
                                 std::uint64_t master_seed, int threads) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (n < 0) throw std::invalid_argument("n must be >= 0");

  const std::vector<Rational> xstar = concentration_vector(w);
  const SkeletonGraph skeleton = skeleton_graph(w);
  const bool zero_one = all_zero_one(w);
  const CategoricalSampler sampler(xstar);
  const std::uint64_t label = graphon_label(w.name);
  const int q = w.q();

  // Verdict for K_y as a function of the counts alone; memoized per worker.
  const auto decide_counts = [&](const std::vector<std::int64_t>& y) -> bool {
    if (n < 3) return false;
    switch (decide_complete_partite(skeleton, y)) {
      case PartiteDecision::Yes: return true;
      case PartiteDecision::No: return false;
      case PartiteDecision::Unknown: break;
    }
    return has_cycle_cover(build_complete_partite(skeleton, y)).exists;
  };

  const int shard_count = static_cast<int>(std::min<std::int64_t>(kShards, trials));
  std::vector<std::int64_t> shard_successes(shard_count, 0);
  const auto run_shard = [&](int shard, std::unordered_map<std::vector<std::int64_t>, bool, VectorHash>& memo) {
    const std::int64_t begin = trials * shard / shard_count;
    const std::int64_t end = trials * (shard + 1) / shard_count;
    std::int64_t successes = 0;
    std::vector<std::int64_t> y(q);
    for (std::int64_t t = begin; t < end; ++t) {
      RngStream rng(derive_trial_seed(master_seed,
                                      {label, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t)}));
      if (zero_one) {
        std::fill(y.begin(), y.end(), 0);
        for (std::int64_t i = 0; i < n; ++i) ++y[sampler.draw(rng)];
        const auto it = memo.find(y);
        bool covered;
        if (it != memo.end()) {
          covered = it->second;
        } else {
          covered = decide_counts(y);
          memo.emplace(y, covered);
        }
        if (covered) ++successes;
      } else {
        const SampledGraph g = sample_graph(w, n, rng);
        if (has_cycle_cover(g).exists) ++successes;
      }
    }
    shard_successes[shard] = successes;
  };

  const int workers = std::max(1, std::min(threads, shard_count));
  if (workers == 1) {
    std::unordered_map<std::vector<std::int64_t>, bool, VectorHash> memo;
    for (int shard = 0; shard < shard_count; ++shard) run_shard(shard, memo);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&, t]() {
        std::unordered_map<std::vector<std::int64_t>, bool, VectorHash> memo;
        for (int shard = t; shard < shard_count; shard += workers) run_shard(shard, memo);
      });
    for (auto& th : pool) th.join();
  }

  TrialBatch batch;
  batch.n = n;
  batch.trials = trials;
  for (auto s : shard_successes) batch.successes += s;
  batch.p_hat = static_cast<double>(batch.successes) / static_cast<double>(batch.trials);
  batch.stderr_ = std::sqrt(batch.p_hat * (1.0 - batch.p_hat) / static_cast<double>(batch.trials));
  return batch;
}

std::vector<TrialBatch> run_sweep(const SweepConfig& config) {
  if (config.n_list.empty()) throw std::invalid_argument("n_list must not be empty");
  for (std::size_t i = 0; i + 1 < config.n_list.size(); ++i)
    if (config.n_list[i] >= config.n_list[i + 1])
      throw std::invalid_argument("n_list must be strictly increasing");

  std::vector<TrialBatch> batches;
  batches.reserve(config.n_list.size());
  for (std::int64_t n : config.n_list) {
    const auto start = std::chrono::steady_clock::now();
    batches.push_back(empirical_probability(config.graphon, n, config.trials, config.master_seed,
                                            config.threads));
    if (config.log_progress) {
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::fprintf(stderr, "sweep %s n=%lld trials=%lld p_hat=%.6g (%.2fs)\n", config.graphon.name.c_str(),
                   static_cast<long long>(n), static_cast<long long>(config.trials),
                   batches.back().p_hat, secs);
    }
  }
  return batches;
}

}  // namespace graphon

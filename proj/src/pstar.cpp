#include "graphon/pstar.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "graphon/facets.hpp"
#include "graphon/gaussian.hpp"
#include "graphon/regime.hpp"

namespace graphon {

std::uint64_t graphon_label(const std::string& name) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

namespace {

constexpr std::uint64_t kPStarTag = 0x70737461;  // stream namespace for this estimator
constexpr int kShards = 256;

}  // namespace

PStarEstimate estimate_p_star(const StepGraphon& w, std::int64_t num_samples,
                              std::uint64_t master_seed, int threads) {
  const RegimeReport report = classify_regime(w);
  PStarEstimate est;
  switch (report.regime) {
    case Regime::Item2:
      throw std::runtime_error("Omega* undefined: x* outside edge cone");
    case Regime::Item1:
      est.mean = 1.0;
      est.analytic = true;
      est.note = "x* interior: active facet set empty, Omega* is the whole hyperplane";
      return est;
    case Regime::Item3:
      est.mean = 0.0;
      est.analytic = true;
      est.note = "degenerate cone: Omega* has measure zero under omega*";
      return est;
    case Regime::Item4:
      break;
  }
  if (num_samples < 1) throw std::invalid_argument("p* estimation needs at least one sample");

  const SkeletonGraph s = skeleton_graph(w);
  const IncidenceMatrix z = incidence_matrix(s);
  const std::vector<Rational> xstar_exact = concentration_vector(w);
  const FacetSet active = active_facets(facet_hyperplanes(z), z, xstar_exact);

  std::vector<double> xstar(xstar_exact.size());
  for (std::size_t i = 0; i < xstar.size(); ++i) xstar[i] = to_double(xstar_exact[i]);
  const GaussianModel model = build_gaussian(xstar);
  const std::uint64_t label = graphon_label(w.name);

  const int shard_count = static_cast<int>(std::min<std::int64_t>(kShards, num_samples));
  std::vector<std::int64_t> hits(shard_count, 0);
  const auto run_shard = [&](int shard) {
    const std::int64_t begin = num_samples * shard / shard_count;
    const std::int64_t end = num_samples * (shard + 1) / shard_count;
    RngStream rng(derive_trial_seed(master_seed, {label, kPStarTag, static_cast<std::uint64_t>(shard)}));
    std::int64_t count = 0;
    for (std::int64_t i = begin; i < end; ++i) {
      const std::vector<double> omega = sample_omega_star(model, rng);
      if (in_omega_star(active, omega)) ++count;
    }
    hits[shard] = count;
  };

  const int workers = std::max(1, std::min(threads, shard_count));
  if (workers == 1) {
    for (int shard = 0; shard < shard_count; ++shard) run_shard(shard);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&, t]() {
        for (int shard = t; shard < shard_count; shard += workers) run_shard(shard);
      });
    for (auto& th : pool) th.join();
  }

  std::int64_t total = 0;
  for (auto h : hits) total += h;
  est.mean = static_cast<double>(total) / static_cast<double>(num_samples);
  est.stderr_ = std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(num_samples));
  est.samples = num_samples;
  return est;
}

}  // namespace graphon

#include "graphon/sampling.hpp"

#include <stdexcept>

namespace graphon {

CategoricalSampler::CategoricalSampler(const std::vector<Rational>& weights) {
  if (weights.empty()) throw std::invalid_argument("categorical sampler needs at least one weight");
  Rational total = 0;
  for (const auto& w : weights) {
    if (w < 0) throw std::invalid_argument("categorical weight must be nonnegative");
    total += w;
  }
  if (total == 0) throw std::invalid_argument("categorical weights must not all be zero");

  Rational cum = 0;
  BigInt common_den = 1;
  cumulative_.reserve(weights.size());
  for (const auto& w : weights) {
    cum += w / total;
    cumulative_.push_back(cum);
    common_den = lcm(common_den, denominator(cum));
  }

  if (common_den <= BigInt(UINT64_MAX >> 1)) {
    common_denominator_ = common_den.convert_to<std::uint64_t>();
    thresholds_.reserve(weights.size());
    for (const auto& c : cumulative_) {
      const BigInt scaled = numerator(c) * (common_den / denominator(c));
      thresholds_.push_back(static_cast<unsigned __int128>(scaled.convert_to<std::uint64_t>()) << 53);
    }
  } else {
    exact_fallback_ = true;
    thresholds_.resize(weights.size());
  }
}

int CategoricalSampler::draw(RngStream& rng) const {
  const std::uint64_t m = rng.next_bits53();
  if (!exact_fallback_) {
    const unsigned __int128 value = static_cast<unsigned __int128>(m) * common_denominator_;
    for (std::size_t i = 0;; ++i)
      if (value < thresholds_[i]) return static_cast<int>(i);
  }
  const Rational u(BigInt(m), BigInt(1) << 53);
  for (std::size_t i = 0;; ++i)
    if (u < cumulative_[i]) return static_cast<int>(i);
}

bool bernoulli_exact(const Rational& p, RngStream& rng) {
  const std::uint64_t m = rng.next_bits53();
  // m / 2^53 < num / den  <=>  m * den < num << 53; both sides fit 128 bits
  // whenever den fits 63 bits, which covers every graphon in practice.
  const BigInt& num = numerator(p);
  const BigInt& den = denominator(p);
  if (den <= BigInt(UINT64_MAX >> 1)) {
    const unsigned __int128 lhs = static_cast<unsigned __int128>(m) * den.convert_to<std::uint64_t>();
    const unsigned __int128 rhs = static_cast<unsigned __int128>(num.convert_to<std::uint64_t>()) << 53;
    return lhs < rhs;
  }
  return Rational(BigInt(m), BigInt(1) << 53) < p;
}

std::vector<int> sample_community_labels(const std::vector<Rational>& xstar, std::int64_t n,
                                         RngStream& rng) {
  if (n < 0) throw std::invalid_argument("negative sample size");
  const CategoricalSampler sampler(xstar);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (auto& l : labels) l = sampler.draw(rng);
  return labels;
}

std::vector<std::int64_t> sample_community_sizes(const std::vector<Rational>& xstar,
                                                 std::int64_t n, RngStream& rng) {
  std::vector<std::int64_t> y(xstar.size(), 0);
  for (int label : sample_community_labels(xstar, n, rng)) ++y[label];
  return y;
}

SampledGraph sample_graph(const StepGraphon& w, std::int64_t n, RngStream& rng) {
  SampledGraph g;
  g.n = static_cast<int>(n);
  g.community = sample_community_labels(concentration_vector(w), n, rng);
  g.adj.assign(g.n, {});
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if (bernoulli_exact(w.values[g.community[i]][g.community[j]], rng)) {
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
        ++g.edge_count;
      }
    }
  }
  return g;
}

}  // namespace graphon

#pragma once

#include <vector>

#include "graphon/rng.hpp"

namespace graphon {

// Singular Gaussian limit of the rescaled multinomial fluctuation: mean x*,
// covariance Sigma = diag(x*) - x* x*', rank q-1, supported on {1'w = 1}.
// factor is a q x (q-1) matrix U with Sigma = U U'.
struct GaussianModel {
  std::vector<double> xstar;
  std::vector<std::vector<double>> sigma;
  std::vector<std::vector<double>> factor;

  int q() const { return static_cast<int>(xstar.size()); }
};

// Spectral factorization: U keeps the q-1 positive-eigenvalue directions
// scaled by the root eigenvalue. x* must be strictly positive with sum 1
// (within 1e-9; the inputs come from exact rationals).
GaussianModel build_gaussian(const std::vector<double>& xstar);

// x* + U g with g standard normal in R^(q-1); lies on {1'w = 1} to 1e-9.
std::vector<double> sample_omega_star(const GaussianModel& model, RngStream& rng);

}  // namespace graphon

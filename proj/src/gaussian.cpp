#include "graphon/gaussian.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace graphon {

GaussianModel build_gaussian(const std::vector<double>& xstar) {
  const int q = static_cast<int>(xstar.size());
  if (q < 1) throw std::invalid_argument("empty mean vector");
  double sum = 0;
  for (double x : xstar) {
    if (x <= 0) throw std::invalid_argument("x* must be strictly positive");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("x* must sum to 1");

  Eigen::MatrixXd sigma(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) sigma(i, j) = (i == j ? xstar[i] : 0.0) - xstar[i] * xstar[j];

  GaussianModel model;
  model.xstar = xstar;
  model.sigma.assign(q, std::vector<double>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) model.sigma[i][j] = sigma(i, j);

  // Eigenvalues ascending; the first is the structural zero along 1.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sigma);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  model.factor.assign(q, std::vector<double>(q - 1));
  for (int c = 1; c < q; ++c) {
    const double lambda = solver.eigenvalues()(c);
    if (lambda <= 0) throw std::runtime_error("covariance rank below q-1");
    const double scale = std::sqrt(lambda);
    for (int r = 0; r < q; ++r) model.factor[r][c - 1] = scale * solver.eigenvectors()(r, c);
  }
  return model;
}

std::vector<double> sample_omega_star(const GaussianModel& model, RngStream& rng) {
  const int q = model.q();
  std::vector<double> g(q - 1);
  for (auto& v : g) v = rng.next_normal();
  std::vector<double> omega = model.xstar;
  for (int r = 0; r < q; ++r)
    for (int c = 0; c < q - 1; ++c) omega[r] += model.factor[r][c] * g[c];
  return omega;
}

}  // namespace graphon

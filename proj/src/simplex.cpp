#include "graphon/simplex.hpp"

#include <cstddef>
#include <stdexcept>

namespace graphon {

namespace {

// Solves the m x m system M y = rhs by Gaussian elimination. M must be
// invertible (it is always a simplex basis here).
std::vector<Rational> solve_square(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t dim = rhs.size();
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && m[pivot][col] == 0) ++pivot;
    if (pivot == dim) throw std::logic_error("singular basis matrix");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = m[col][col];
    for (std::size_t j = col; j < dim; ++j) m[col][j] /= inv;
    rhs[col] /= inv;
    for (std::size_t row = 0; row < dim; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col];
      for (std::size_t j = col; j < dim; ++j) m[row][j] -= f * m[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  return rhs;
}

struct Tableau {
  std::size_t rows, cols;  // cols excludes the rhs column
  std::vector<std::vector<Rational>> t;
  std::vector<Rational> cost;  // reduced costs; cost[cols] == -objective
  std::vector<std::size_t> basis;

  Rational& rhs(std::size_t i) { return t[i][cols]; }

  void pivot(std::size_t r, std::size_t s) {
    const Rational inv = t[r][s];
    for (auto& v : t[r]) v /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || t[i][s] == 0) continue;
      const Rational f = t[i][s];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[r][j];
    }
    if (cost[s] != 0) {
      const Rational f = cost[s];
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * t[r][j];
    }
    basis[r] = s;
  }

  // Bland: entering = lowest-index eligible column with negative reduced
  // cost; leaving = lowest basis index among the ratio-test ties.
  // Returns false on an unbounded ray.
  bool optimize(std::size_t eligible_cols) {
    for (;;) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < eligible_cols; ++j)
        if (cost[j] < 0) {
          enter = j;
          break;
        }
      if (enter == cols) return true;

      std::size_t leave = rows;
      Rational best;
      for (std::size_t i = 0; i < rows; ++i) {
        if (t[i][enter] <= 0) continue;
        const Rational ratio = rhs(i) / t[i][enter];
        if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  std::vector<Rational> c) {
  const std::size_t m = b.size();
  const std::size_t n = c.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("lp: ragged constraint matrix");
  if (a.size() != m) throw std::invalid_argument("lp: row count mismatch");

  // Normalize to b >= 0; remember flips to report duals for the caller's rows.
  std::vector<int> sign(m, 1);
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0) {
      sign[i] = -1;
      b[i] = -b[i];
      for (auto& v : a[i]) v = -v;
    }

  Tableau tab;
  tab.rows = m;
  tab.cols = n + m;  // artificials appended
  tab.t.assign(m, std::vector<Rational>(tab.cols + 1, Rational(0)));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = a[i][j];
    tab.t[i][n + i] = 1;
    tab.t[i][tab.cols] = b[i];
    tab.basis[i] = n + i;
  }

  // Columns of the extended system, used to rebuild exact basis solves.
  const auto column = [&](std::size_t j, std::size_t i) -> Rational {
    return j < n ? a[i][j] : Rational(j - n == i ? 1 : 0);
  };
  const auto basis_dual = [&](const std::vector<Rational>& costs) {
    std::vector<std::vector<Rational>> bt(m, std::vector<Rational>(m));
    std::vector<Rational> cb(m);
    for (std::size_t i = 0; i < m; ++i) {
      cb[i] = costs[tab.basis[i]];
      for (std::size_t r = 0; r < m; ++r) bt[i][r] = column(tab.basis[i], r);
    }
    std::vector<Rational> y = solve_square(std::move(bt), std::move(cb));
    for (std::size_t i = 0; i < m; ++i)
      if (sign[i] < 0) y[i] = -y[i];
    return y;
  };

  // Phase 1: minimize the artificial mass.
  std::vector<Rational> phase1(tab.cols + 1, Rational(0));
  for (std::size_t j = n; j < tab.cols; ++j) phase1[j] = 1;
  tab.cost = phase1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= tab.cols; ++j) tab.cost[j] -= tab.t[i][j];
  tab.optimize(tab.cols);

  LpResult result;
  if (-tab.cost[tab.cols] > 0) {
    result.status = LpStatus::Infeasible;
    result.farkas = basis_dual(phase1);
    return result;
  }

  // Drive leftover zero-value artificials out of the basis where possible;
  // rows that cannot pivot are redundant and stay inert.
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (tab.t[i][j] != 0) {
        tab.pivot(i, j);
        break;
      }
  }

  // Phase 2 over the original objective; artificials may not re-enter.
  tab.cost.assign(tab.cols + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j) tab.cost[j] = c[j];
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] >= n) continue;
    const Rational f = tab.cost[tab.basis[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j <= tab.cols; ++j) tab.cost[j] -= f * tab.t[i][j];
  }
  if (!tab.optimize(n)) {
    result.status = LpStatus::Unbounded;
    return result;
  }

  result.status = LpStatus::Optimal;
  result.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] < n) result.x[tab.basis[i]] = tab.rhs(i);
  result.objective = 0;
  for (std::size_t j = 0; j < n; ++j) result.objective += c[j] * result.x[j];
  std::vector<Rational> phase2(tab.cols + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  result.dual = basis_dual(phase2);
  return result;
}

}  // namespace graphon

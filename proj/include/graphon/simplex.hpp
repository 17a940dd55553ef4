#pragma once

#include <vector>

#include "graphon/rational.hpp"

namespace graphon {

enum class LpStatus { Optimal, Infeasible, Unbounded };

// min c'x  subject to  A x = b, x >= 0, solved exactly.
//
// On Optimal: x is a basic optimal solution, objective = c'x, and dual
// satisfies dual'A <= c' componentwise with dual'b = objective.
// On Infeasible: farkas satisfies farkas'A <= 0 componentwise and
// farkas'b > 0.
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  Rational objective;
  std::vector<Rational> dual;
  std::vector<Rational> farkas;
};

// Dense two-phase tableau simplex with Bland's rule (no cycling). Sized for
// the small systems that arise from edge cones; every pivot is exact.
LpResult solve_lp(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                  std::vector<Rational> c);

}  // namespace graphon

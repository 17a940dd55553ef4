#pragma once

#include "graphon/cone.hpp"
#include "graphon/step_graphon.hpp"

namespace graphon {

enum class Regime { Item1, Item2, Item3, Item4 };
enum class PredictedRate { ExpToOne, ExpToZero, RootNToZero, RootNToPStar };

const char* to_string(Regime r);
const char* to_string(PredictedRate r);

// Condition A: the skeleton has an odd cycle. B: x* in the relative interior
// of the edge cone. B': x* in the edge cone. Exactly one regime holds:
//   Item1 = A and B          (P_n -> 1 exponentially)
//   Item2 = not B'           (P_n -> 0 exponentially)
//   Item3 = B' and not A     (P_n -> 0 like 1/sqrt(n))
//   Item4 = A, B', not B     (P_n -> p* like 1/sqrt(n))
struct RegimeReport {
  bool cond_a = false;
  bool cond_b_prime = false;
  bool cond_b = false;
  Verdict membership = Verdict::Outside;
  Regime regime = Regime::Item2;
  PredictedRate predicted_rate = PredictedRate::ExpToZero;
};

// Throws std::runtime_error when the skeleton is disconnected; classify each
// connected component separately in that case.
RegimeReport classify_regime(const StepGraphon& w);

}  // namespace graphon

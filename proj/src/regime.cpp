#include "graphon/regime.hpp"

#include <stdexcept>

namespace graphon {

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Item1: return "Item1";
    case Regime::Item2: return "Item2";
    case Regime::Item3: return "Item3";
    case Regime::Item4: return "Item4";
  }
  return "?";
}

const char* to_string(PredictedRate r) {
  switch (r) {
    case PredictedRate::ExpToOne: return "ExpToOne";
    case PredictedRate::ExpToZero: return "ExpToZero";
    case PredictedRate::RootNToZero: return "RootNToZero";
    case PredictedRate::RootNToPStar: return "RootNToPStar";
  }
  return "?";
}

RegimeReport classify_regime(const StepGraphon& w) {
  const SkeletonGraph s = skeleton_graph(w);
  if (!is_connected(s))
    throw std::runtime_error("skeleton graph is disconnected; classify each connected component separately");

  RegimeReport report;
  report.cond_a = has_odd_cycle(s);
  const IncidenceMatrix z = incidence_matrix(s);
  report.membership = cone_membership(z, concentration_vector(w)).verdict;
  report.cond_b_prime = report.membership != Verdict::Outside;
  report.cond_b = report.membership == Verdict::Interior;

  if (!report.cond_b_prime) {
    report.regime = Regime::Item2;
    report.predicted_rate = PredictedRate::ExpToZero;
  } else if (!report.cond_a) {
    report.regime = Regime::Item3;
    report.predicted_rate = PredictedRate::RootNToZero;
  } else if (report.cond_b) {
    report.regime = Regime::Item1;
    report.predicted_rate = PredictedRate::ExpToOne;
  } else {
    report.regime = Regime::Item4;
    report.predicted_rate = PredictedRate::RootNToPStar;
  }
  return report;
}

}  // namespace graphon

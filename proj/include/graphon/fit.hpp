#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphon/pstar.hpp"
#include "graphon/regime.hpp"
#include "graphon/step_graphon.hpp"
#include "graphon/sweep.hpp"

namespace graphon {

enum class FitCoordinates { LogPvsN, Log1mPvsN, LogPvsLogN, LogAbsDevVsLogN };
const char* to_string(FitCoordinates c);

struct FitResult {
  double slope = 0;
  double intercept = 0;
  double residual_rms = 0;
  int points_used = 0;
  std::vector<std::pair<double, double>> points;  // the fitted (x, y) pairs
};

// Ordinary least squares; needs >= 2 points with distinct x values.
FitResult linear_fit(const std::vector<std::pair<double, double>>& points);

struct RateReport {
  FitCoordinates coordinates = FitCoordinates::LogPvsN;
  Regime regime = Regime::Item2;
  FitResult fit;
  // -1/2 for the root-n regimes; unset for the exponential ones.
  std::optional<double> theoretical_exponent;
};

// Fits the sweep in the regime's coordinates, excluding saturated batches:
//   Item1: log(1 - p) vs n      Item2: log p vs n
//   Item3: log p vs log n       Item4: log|p - p*| vs log n (needs pstar)
RateReport rate_report(const StepGraphon& w, const std::vector<TrialBatch>& sweep,
                       const std::optional<PStarEstimate>& pstar);

// Emits <name>_sweep.csv, <name>_fits.json and one gnuplot-ready
// <name>_<coordinates>.dat per fit, byte-deterministic given the inputs.
void write_outputs(const std::string& graphon_name, const std::vector<TrialBatch>& sweep,
                   const std::vector<RateReport>& fits, const std::string& directory);

// Reads a sweep CSV produced by write_outputs.
std::vector<TrialBatch> read_sweep_csv(const std::string& path);

// "%.10g", the numeric format of every emitted file.
std::string format_g10(double value);

}  // namespace graphon

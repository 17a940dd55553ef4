#include "graphon/fit.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace graphon {

const char* to_string(FitCoordinates c) {
  switch (c) {
    case FitCoordinates::LogPvsN: return "LogPvsN";
    case FitCoordinates::Log1mPvsN: return "Log1mPvsN";
    case FitCoordinates::LogPvsLogN: return "LogPvsLogN";
    case FitCoordinates::LogAbsDevVsLogN: return "LogAbsDevVsLogN";
  }
  return "?";
}

std::string format_g10(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  return buf;
}

FitResult linear_fit(const std::vector<std::pair<double, double>>& points) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("linear fit needs at least two points");
  double mean_x = 0, mean_y = 0;
  for (const auto& [x, y] : points) {
    mean_x += x;
    mean_y += y;
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    sxx += (x - mean_x) * (x - mean_x);
    sxy += (x - mean_x) * (y - mean_y);
  }
  if (sxx == 0) throw std::invalid_argument("linear fit: degenerate x values");

  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  double ss = 0;
  for (const auto& [x, y] : points) {
    const double r = y - (fit.slope * x + fit.intercept);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / static_cast<double>(n));
  fit.points_used = static_cast<int>(n);
  fit.points = points;
  return fit;
}

RateReport rate_report(const StepGraphon& w, const std::vector<TrialBatch>& sweep,
                       const std::optional<PStarEstimate>& pstar) {
  if (sweep.empty()) throw std::invalid_argument("rate report needs a nonempty sweep");
  RateReport report;
  report.regime = classify_regime(w).regime;
  switch (report.regime) {
    case Regime::Item1: report.coordinates = FitCoordinates::Log1mPvsN; break;
    case Regime::Item2: report.coordinates = FitCoordinates::LogPvsN; break;
    case Regime::Item3:
      report.coordinates = FitCoordinates::LogPvsLogN;
      report.theoretical_exponent = -0.5;
      break;
    case Regime::Item4:
      report.coordinates = FitCoordinates::LogAbsDevVsLogN;
      report.theoretical_exponent = -0.5;
      if (!pstar.has_value()) throw std::invalid_argument("regime Item4 rate report needs a p* estimate");
      break;
  }

  std::vector<std::pair<double, double>> points;
  for (const auto& batch : sweep) {
    if (batch.saturated()) continue;
    const double n = static_cast<double>(batch.n);
    switch (report.coordinates) {
      case FitCoordinates::Log1mPvsN:
        points.emplace_back(n, std::log(1.0 - batch.p_hat));
        break;
      case FitCoordinates::LogPvsN:
        points.emplace_back(n, std::log(batch.p_hat));
        break;
      case FitCoordinates::LogPvsLogN:
        points.emplace_back(std::log(n), std::log(batch.p_hat));
        break;
      case FitCoordinates::LogAbsDevVsLogN: {
        const double dev = std::abs(batch.p_hat - pstar->mean);
        if (dev == 0) continue;  // log undefined; treat like saturation
        points.emplace_back(std::log(n), std::log(dev));
        break;
      }
    }
  }
  if (points.size() < 2)
    throw std::runtime_error("rate report: fewer than two usable batches (saturated sweep)");
  report.fit = linear_fit(points);
  return report;
}

namespace {

nlohmann::ordered_json fit_to_json(const std::string& graphon_name, const RateReport& report) {
  nlohmann::ordered_json j;
  j["graphon"] = graphon_name;
  j["coordinates"] = to_string(report.coordinates);
  j["slope"] = report.fit.slope;
  j["intercept"] = report.fit.intercept;
  j["residual_rms"] = report.fit.residual_rms;
  j["points_used"] = report.fit.points_used;
  return j;
}

}  // namespace

void write_outputs(const std::string& graphon_name, const std::vector<TrialBatch>& sweep,
                   const std::vector<RateReport>& fits, const std::string& directory) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + directory + "': " + ec.message());

  const auto open = [](const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
  };

  {
    auto csv = open(fs::path(directory) / (graphon_name + "_sweep.csv"));
    csv << "graphon,n,trials,successes,p_hat,stderr\n";
    for (const auto& b : sweep)
      csv << graphon_name << ',' << b.n << ',' << b.trials << ',' << b.successes << ','
          << format_g10(b.p_hat) << ',' << format_g10(b.stderr_) << '\n';
  }
  {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& f : fits) arr.push_back(fit_to_json(graphon_name, f));
    auto json_out = open(fs::path(directory) / (graphon_name + "_fits.json"));
    json_out << arr.dump(2) << '\n';
  }
  for (const auto& f : fits) {
    auto dat = open(fs::path(directory) / (graphon_name + "_" + to_string(f.coordinates) + ".dat"));
    dat << "# fit: slope=" << format_g10(f.fit.slope) << " intercept=" << format_g10(f.fit.intercept)
        << '\n';
    for (const auto& [x, y] : f.fit.points) dat << format_g10(x) << ' ' << format_g10(y) << '\n';
  }
}

std::vector<TrialBatch> read_sweep_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sweep CSV '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty sweep CSV '" + path + "'");
  std::vector<TrialBatch> batches;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 6) throw std::runtime_error("malformed sweep CSV row: " + line);
    TrialBatch b;
    b.n = std::stoll(fields[1]);
    b.trials = std::stoll(fields[2]);
    b.successes = std::stoll(fields[3]);
    b.p_hat = std::stod(fields[4]);
    b.stderr_ = std::stod(fields[5]);
    batches.push_back(b);
  }
  return batches;
}

}  // namespace graphon

#include "graphon/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "graphon/catalog.hpp"
#include "graphon/facets.hpp"
#include "graphon/fit.hpp"
#include "graphon/graph.hpp"
#include "graphon/pstar.hpp"
#include "graphon/regime.hpp"
#include "graphon/sampling.hpp"
#include "graphon/step_graphon.hpp"
#include "graphon/sweep.hpp"
#include "graphon/two_factor.hpp"

namespace graphon {

namespace {

std::vector<std::int64_t> parse_n_list(const std::string& text) {
  std::vector<std::int64_t> out;
  const auto range_pos = text.find("..");
  if (range_pos != std::string::npos) {
    // "a..b:step"
    const auto colon = text.find(':', range_pos);
    const std::int64_t a = std::stoll(text.substr(0, range_pos));
    const std::int64_t b = std::stoll(text.substr(range_pos + 2, colon - range_pos - 2));
    const std::int64_t step = colon == std::string::npos ? 1 : std::stoll(text.substr(colon + 1));
    if (step <= 0 || b < a) throw std::invalid_argument("bad range '" + text + "'");
    for (std::int64_t n = a; n <= b; n += step) out.push_back(n);
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = text.find(',', pos);
      const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (item.empty()) throw std::invalid_argument("bad n-list '" + text + "'");
      out.push_back(std::stoll(item));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  if (out.empty()) throw std::invalid_argument("empty n-list");
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    if (out[i] >= out[i + 1]) throw std::invalid_argument("n-list must be strictly increasing");
  if (out.front() < 1) throw std::invalid_argument("n must be positive");
  return out;
}

nlohmann::ordered_json regime_json(const RegimeReport& report) {
  nlohmann::ordered_json j;
  j["cond_A"] = report.cond_a;
  j["cond_B"] = report.cond_b;
  j["cond_B_prime"] = report.cond_b_prime;
  j["membership"] = to_string(report.membership);
  j["regime"] = to_string(report.regime);
  j["predicted_rate"] = to_string(report.predicted_rate);
  return j;
}

nlohmann::ordered_json normals_json(const std::vector<std::vector<BigInt>>& normals) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& v : normals) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& e : v) row.push_back(e.str());
    arr.push_back(std::move(row));
  }
  return arr;
}

int run_analyze(const std::string& source) {
  const StepGraphon w = load_graphon(source);
  const RegimeReport report = classify_regime(w);
  const SkeletonGraph s = skeleton_graph(w);
  const IncidenceMatrix z = incidence_matrix(s);
  const std::vector<Rational> xstar = concentration_vector(w);

  nlohmann::ordered_json j;
  j["graphon"] = w.name;
  j["q"] = w.q();
  nlohmann::ordered_json sig = nlohmann::ordered_json::array();
  for (const auto& v : w.sigma) sig.push_back(format_rational(v));
  j["sigma"] = std::move(sig);
  nlohmann::ordered_json xs = nlohmann::ordered_json::array();
  for (const auto& v : xstar) xs.push_back(format_rational(v));
  j["x_star"] = std::move(xs);
  j["delta_min_edge_value"] = format_rational(min_edge_value(w));

  nlohmann::ordered_json sk;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (auto [a, b] : s.edges) edges.push_back(nlohmann::ordered_json::array({a, b}));
  sk["edges"] = std::move(edges);
  sk["has_odd_cycle"] = report.cond_a;
  j["skeleton"] = std::move(sk);

  nlohmann::ordered_json cone;
  cone["dimension"] = cone_dimension(z);
  cone["membership"] = to_string(report.membership);
  if (w.q() >= 2) {
    const FacetSet facets = facet_hyperplanes(z);
    cone["facet_normals"] = normals_json(facets.normals);
    if (report.membership != Verdict::Outside) {
      const FacetSet active = active_facets(facets, z, xstar);
      cone["active_facet_normals"] = normals_json(active.normals);
    } else {
      cone["active_facet_normals"] = nullptr;
      cone["active_facet_note"] = "undefined: x* outside edge cone";
    }
  } else {
    cone["facet_normals"] = nullptr;
    cone["facet_note"] = "facet enumeration unsupported for q = 1";
  }
  j["cone"] = std::move(cone);
  j["regime_report"] = regime_json(report);
  std::cout << j.dump(2) << '\n';
  return 0;
}

int run_pstar(const std::string& source, std::int64_t samples, std::uint64_t seed, int threads) {
  const StepGraphon w = load_graphon(source);
  const RegimeReport report = classify_regime(w);
  const PStarEstimate est = estimate_p_star(w, samples, seed, threads);
  nlohmann::ordered_json j;
  j["graphon"] = w.name;
  j["regime"] = to_string(report.regime);
  j["p_star_mean"] = est.mean;
  j["stderr"] = est.stderr_;
  j["samples"] = est.samples;
  j["seed"] = seed;
  if (!est.note.empty()) j["note"] = est.note;
  std::cout << j.dump(2) << '\n';
  return 0;
}

std::vector<RateReport> fits_for(const StepGraphon& w, const std::vector<TrialBatch>& batches,
                                 std::int64_t samples, std::uint64_t seed, int threads,
                                 std::string* skip_reason) {
  std::optional<PStarEstimate> pstar;
  if (classify_regime(w).regime == Regime::Item4)
    pstar = estimate_p_star(w, samples, seed, threads);
  try {
    return {rate_report(w, batches, pstar)};
  } catch (const std::exception& e) {
    if (skip_reason == nullptr) throw;
    *skip_reason = e.what();
    return {};
  }
}

int run_sweep_cmd(const std::string& source, const std::string& n_list_text, std::int64_t trials,
                  std::int64_t samples, std::uint64_t seed, int threads, const std::string& out_dir) {
  SweepConfig config;
  config.graphon = load_graphon(source);
  config.n_list = parse_n_list(n_list_text);
  config.trials = trials;
  config.master_seed = seed;
  config.threads = threads;
  config.out_dir = out_dir;
  const std::vector<TrialBatch> batches = run_sweep(config);

  std::string skip_reason;
  const std::vector<RateReport> fits =
      fits_for(config.graphon, batches, samples, seed, threads, &skip_reason);
  write_outputs(config.graphon.name, batches, fits, out_dir);
  if (!skip_reason.empty()) std::cerr << "fit skipped: " << skip_reason << '\n';
  for (const auto& f : fits)
    std::cout << "fit " << config.graphon.name << ' ' << to_string(f.coordinates)
              << " slope=" << format_g10(f.fit.slope) << " intercept=" << format_g10(f.fit.intercept)
              << " residual_rms=" << format_g10(f.fit.residual_rms) << " points=" << f.fit.points_used
              << '\n';
  return 0;
}

int run_fit(const std::string& source, std::int64_t samples, std::uint64_t seed, int threads,
            const std::string& out_dir) {
  const StepGraphon w = load_graphon(source);
  const std::string csv = (std::filesystem::path(out_dir) / (w.name + "_sweep.csv")).string();
  const std::vector<TrialBatch> batches = read_sweep_csv(csv);
  const std::vector<RateReport> fits = fits_for(w, batches, samples, seed, threads, nullptr);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& f : fits) {
    nlohmann::ordered_json j;
    j["graphon"] = w.name;
    j["coordinates"] = to_string(f.coordinates);
    j["slope"] = f.fit.slope;
    j["intercept"] = f.fit.intercept;
    j["residual_rms"] = f.fit.residual_rms;
    j["points_used"] = f.fit.points_used;
    arr.push_back(std::move(j));
  }
  std::cout << arr.dump(2) << '\n';
  return 0;
}

int run_detect(const std::string& path, bool want_witness) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  const SampledGraph g = read_edge_list(in);
  const CycleCoverVerdict verdict = has_cycle_cover(g, nullptr, want_witness);
  std::cout << "cycle cover: " << (verdict.exists ? "yes" : "no") << '\n';
  std::cout << "method: " << to_string(verdict.method) << '\n';
  if (verdict.witness.has_value()) {
    for (const auto& cycle : *verdict.witness) {
      std::cout << "cycle:";
      for (int v : cycle) std::cout << ' ' << v;
      std::cout << '\n';
    }
  }
  return 0;
}

int run_sample(const std::string& source, std::int64_t n, std::uint64_t seed) {
  const StepGraphon w = load_graphon(source);
  RngStream rng(derive_trial_seed(seed, {graphon_label(w.name), static_cast<std::uint64_t>(n)}));
  const SampledGraph g = sample_graph(w, n, rng);
  write_edge_list(g, std::cout);
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"step-graphon cycle-cover analysis"};
  app.require_subcommand(1);

  std::string graphon_source, n_list_text, out_dir, graph_file;
  std::int64_t n = 0;
  std::int64_t trials = 20000;
  std::int64_t samples = 1000000;
  std::uint64_t seed = 42;
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  bool witness = false;

  auto* analyze = app.add_subcommand("analyze", "regime classification and cone geometry report");
  analyze->add_option("--graphon", graphon_source, "catalog name or graphon JSON path")->required();

  auto* pstar = app.add_subcommand("pstar", "Monte-Carlo estimate of the limit probability p*");
  pstar->add_option("--graphon", graphon_source)->required();
  pstar->add_option("--samples", samples, "Monte-Carlo sample count")->check(CLI::PositiveNumber);
  pstar->add_option("--seed", seed);
  pstar->add_option("--threads", threads)->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("sweep", "empirical cycle-cover probabilities across n");
  sweep->add_option("--graphon", graphon_source)->required();
  sweep->add_option("--n-list", n_list_text, "comma list or a..b:step")->required();
  sweep->add_option("--trials", trials)->check(CLI::PositiveNumber);
  sweep->add_option("--samples", samples, "p* samples when the regime needs it")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", seed);
  sweep->add_option("--threads", threads)->check(CLI::PositiveNumber);
  sweep->add_option("--out", out_dir, "output directory")->required();

  auto* fit = app.add_subcommand("fit", "rate fit from a previously written sweep CSV");
  fit->add_option("--graphon", graphon_source)->required();
  fit->add_option("--out", out_dir, "directory holding <name>_sweep.csv")->required();
  fit->add_option("--samples", samples)->check(CLI::PositiveNumber);
  fit->add_option("--seed", seed);
  fit->add_option("--threads", threads)->check(CLI::PositiveNumber);

  auto* detect = app.add_subcommand("detect", "cycle-cover decision for an edge-list graph");
  detect->add_option("file", graph_file, "edge list: first line 'n m', then 'i j' lines")->required();
  detect->add_flag("--witness", witness, "print the covering cycles when one exists");

  auto* sample = app.add_subcommand("sample", "sample one graph and print its edge list");
  sample->add_option("--graphon", graphon_source)->required();
  sample->add_option("--n", n, "node count")->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (analyze->parsed()) return run_analyze(graphon_source);
    if (pstar->parsed()) return run_pstar(graphon_source, samples, seed, threads);
    if (sweep->parsed())
      return run_sweep_cmd(graphon_source, n_list_text, trials, samples, seed, threads, out_dir);
    if (fit->parsed()) return run_fit(graphon_source, samples, seed, threads, out_dir);
    if (detect->parsed()) return run_detect(graph_file, witness);
    if (sample->parsed()) return run_sample(graphon_source, n, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace graphon

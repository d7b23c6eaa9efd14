// SPDX-License-Identifier: Apache-2.0
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "spdlink/config.hpp"
#include "spdlink/experiment.hpp"
#include "spdlink/geometry.hpp"
#include "spdlink/io.hpp"

namespace {

spdlink::ExperimentConfig load_or_default(const std::string& config_path) {
  if (config_path.empty()) {
    return spdlink::ExperimentConfig{};
  }
  return spdlink::load_config(config_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SPD-manifold link scheduling simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::uint64_t seed = 0;
  std::string out_path;
  std::vector<int> k_list;
  int trials = 0;
  std::vector<std::string> schemes;

  CLI::App* gen = app.add_subcommand(
      "gen", "Write one deployment file (header: k area_side seed)");
  int gen_k = 0;
  gen->add_option("--k", gen_k, "Number of D2D pairs")->required();
  gen->add_option("--config", config_path,
                  "Config file supplying area_side_m and the radius range");
  auto* gen_seed = gen->add_option("--seed", seed, "Deployment seed");
  gen->add_option("--out", out_path, "Output path")
      ->default_val("deployment.txt");

  CLI::App* run = app.add_subcommand(
      "run", "Run the Monte Carlo experiment and write the result CSV");
  run->add_option("--config", config_path, "Config file (key = value lines)");
  auto* run_seed = run->add_option("--seed", seed, "Override base_seed");
  auto* run_out = run->add_option("--out", out_path, "Override output_path");
  auto* run_k =
      run->add_option("--k", k_list, "Override k_values")->delimiter(',');
  auto* run_trials =
      run->add_option("--trials", trials, "Override n_trials");
  auto* run_schemes =
      run->add_option("--schemes", schemes, "Override scheme list")
          ->delimiter(',');

  CLI::App* sweep = app.add_subcommand(
      "sweep-r", "Rerun the position-based scheme over the config's r grid");
  sweep->add_option("--config", config_path, "Config file");
  auto* sweep_seed = sweep->add_option("--seed", seed, "Override base_seed");
  auto* sweep_out =
      sweep->add_option("--out", out_path, "Override output_path");
  auto* sweep_k =
      sweep->add_option("--k", k_list, "Override k_values")->delimiter(',');
  auto* sweep_trials =
      sweep->add_option("--trials", trials, "Override n_trials");

  CLI::App* summ = app.add_subcommand(
      "summarize", "Reduce a result CSV to per-(k, scheme) means");
  std::string summ_input;
  summ->add_option("input", summ_input, "Result CSV to summarize")
      ->required();
  auto* summ_out =
      summ->add_option("--out", out_path, "Summary path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const spdlink::ExperimentConfig cfg = load_or_default(config_path);
      const std::uint64_t dep_seed =
          gen_seed->count() > 0 ? seed : cfg.base_seed;
      const spdlink::Deployment dep = spdlink::gen_deployment(
          gen_k, cfg.area_side_m, cfg.r_min_m, cfg.r_max_m, dep_seed);
      spdlink::save_deployment(dep, out_path);
      std::cout << "wrote " << out_path << " (k=" << dep.k << ", seed="
                << dep.seed << ")\n";
    } else if (run->parsed()) {
      spdlink::ExperimentConfig cfg = load_or_default(config_path);
      if (run_seed->count() > 0) cfg.base_seed = seed;
      if (run_k->count() > 0) cfg.k_values = k_list;
      if (run_trials->count() > 0) cfg.n_trials = trials;
      if (run_schemes->count() > 0) cfg.schemes = schemes;
      if (run_out->count() > 0) cfg.output_path = out_path;
      const std::vector<spdlink::TrialResult> rows =
          spdlink::run_experiment(cfg);
      spdlink::emit_csv(rows, cfg.output_path);
      std::cout << "wrote " << cfg.output_path << " (" << rows.size()
                << " rows)\n";
    } else if (sweep->parsed()) {
      spdlink::ExperimentConfig cfg = load_or_default(config_path);
      if (sweep_seed->count() > 0) cfg.base_seed = seed;
      if (sweep_k->count() > 0) cfg.k_values = k_list;
      if (sweep_trials->count() > 0) cfg.n_trials = trials;
      if (sweep_out->count() > 0) cfg.output_path = out_path;
      const std::vector<spdlink::SweepEntry> rows =
          spdlink::sweep_r(cfg, cfg.sweep_r_values);
      spdlink::emit_sweep_csv(rows, cfg.output_path);
      std::cout << "wrote " << cfg.output_path << " (" << rows.size()
                << " rows)\n";
    } else if (summ->parsed()) {
      const std::vector<spdlink::SummaryRow> rows =
          spdlink::summarize(spdlink::load_results_csv(summ_input));
      if (summ_out->count() > 0) {
        spdlink::emit_summary_csv(rows, out_path);
        std::cout << "wrote " << out_path << " (" << rows.size()
                  << " rows)\n";
      } else {
        spdlink::emit_summary_csv(rows, std::cout);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

// SPDX-License-Identifier: Apache-2.0
#include "spdlink/experiment.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "spdlink/rng.hpp"

using namespace spdlink;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.k_values = {5};
  cfg.n_trials = 1;
  cfg.schemes = {"all"};
  cfg.base_seed = 7;
  return cfg;
}

}  // namespace

TEST_CASE("run_trial derives the documented seeds") {
  ExperimentConfig cfg = small_config();
  cfg.schemes = {"lem", "random"};
  const TrialOutcome out = run_trial(cfg, 5, 3);
  CHECK(out.deployment_seed == cfg.base_seed + 3);
  CHECK(out.fading_seed == derive_seed(out.deployment_seed, 1));
  CHECK(out.dep.seed == out.deployment_seed);
  CHECK(out.dep.k == 5);
  // The random scheme consumes the stream-2 seed.
  const Schedule expected = schedule_random(
      5, cfg.random_activation_prob, derive_seed(out.deployment_seed, 2));
  CHECK(out.outcome("random").schedule.z == expected.z);
}

TEST_CASE("run_trial honors a fading seed override without moving lem") {
  ExperimentConfig cfg = small_config();
  cfg.schemes = {"lem", "greedy"};
  const TrialOutcome base = run_trial(cfg, 8, 0);
  const TrialOutcome shifted = run_trial(cfg, 8, 0, 123456789u);
  CHECK(shifted.fading_seed == 123456789u);
  // Same deployment in both runs.
  CHECK(shifted.dep.tx[3].x == base.dep.tx[3].x);
  // The position-based schedule ignores fading entirely.
  CHECK(shifted.outcome("lem").schedule.z == base.outcome("lem").schedule.z);
}

TEST_CASE("run_trial records one outcome per scheme in config order") {
  ExperimentConfig cfg = small_config();
  cfg.schemes = {"greedy", "lem", "all"};
  const TrialOutcome out = run_trial(cfg, 4, 0);
  REQUIRE(out.outcomes.size() == 3);
  CHECK(out.outcomes[0].label == "greedy");
  CHECK(out.outcomes[1].label == "lem");
  CHECK(out.outcomes[2].label == "all");
  CHECK_THROWS_AS(out.outcome("random"), std::out_of_range);
}

TEST_CASE("all-scheme trial reports full activation") {
  const std::vector<TrialResult> rows = run_experiment(small_config());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].k == 5);
  CHECK(rows[0].scheme == "all");
  CHECK(rows[0].activation_ratio == 1.0);
  CHECK(rows[0].trial_id == 0);
  CHECK(rows[0].elapsed_ms == 0.0);
  CHECK(rows[0].sum_rate_bps > 0.0);
}

TEST_CASE("run_experiment is byte-deterministic") {
  ExperimentConfig cfg;
  cfg.k_values = {3, 6};
  cfg.n_trials = 4;
  cfg.schemes = {"lem", "greedy", "strongest", "random", "all", "oracle"};
  cfg.base_seed = 11;
  std::ostringstream a;
  emit_csv(run_experiment(cfg), a);
  std::ostringstream b;
  emit_csv(run_experiment(cfg), b);
  CHECK(a.str() == b.str());
  CHECK(a.str().size() > 0);
}

TEST_CASE("parallel execution emits the same rows as serial") {
  ExperimentConfig cfg;
  cfg.k_values = {4, 7};
  cfg.n_trials = 6;
  cfg.schemes = {"lem", "greedy", "random"};
  cfg.base_seed = 31;
  cfg.threads = 1;
  std::ostringstream serial;
  emit_csv(run_experiment(cfg), serial);
  cfg.threads = 3;
  std::ostringstream parallel;
  emit_csv(run_experiment(cfg), parallel);
  CHECK(serial.str() == parallel.str());
}

TEST_CASE("rows come out ordered by (k position, trial, scheme position)") {
  ExperimentConfig cfg;
  cfg.k_values = {6, 2};  // deliberately unsorted
  cfg.n_trials = 2;
  cfg.schemes = {"random", "all"};
  cfg.base_seed = 5;
  const std::vector<TrialResult> rows = run_experiment(cfg);
  REQUIRE(rows.size() == 8);
  int idx = 0;
  for (int k : {6, 2}) {
    for (long long trial = 0; trial < 2; ++trial) {
      for (const std::string& scheme : {"random", "all"}) {
        CHECK(rows[idx].k == k);
        CHECK(rows[idx].trial_id == trial);
        CHECK(rows[idx].scheme == scheme);
        CHECK(rows[idx].deployment_seed ==
              cfg.base_seed + static_cast<std::uint64_t>(trial));
        ++idx;
      }
    }
  }
}

TEST_CASE("oracle dominates lem on every row at k = 8") {
  ExperimentConfig cfg;
  cfg.k_values = {8};
  cfg.n_trials = 50;
  cfg.schemes = {"lem", "oracle"};
  cfg.base_seed = 900;
  const std::vector<TrialResult> rows = run_experiment(cfg);
  REQUIRE(rows.size() == 100);
  for (int t = 0; t < 50; ++t) {
    const TrialResult& lem = rows[2 * t];
    const TrialResult& oracle = rows[2 * t + 1];
    REQUIRE(lem.scheme == "lem");
    REQUIRE(oracle.scheme == "oracle");
    CHECK(oracle.sum_rate_bps >= lem.sum_rate_bps);
  }
}

TEST_CASE("oracle beyond the guard becomes a skipped warning row") {
  ExperimentConfig cfg;
  cfg.k_values = {14};
  cfg.n_trials = 2;
  cfg.schemes = {"lem", "oracle"};
  cfg.base_seed = 3;
  const std::vector<TrialResult> rows = run_experiment(cfg);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1].scheme == "oracle-skipped");
  CHECK(rows[1].sum_rate_bps == 0.0);
  CHECK(rows[1].activation_ratio == 0.0);
  CHECK(rows[3].scheme == "oracle-skipped");
  // The position-based rows are unaffected.
  CHECK(rows[0].scheme == "lem");
  CHECK(rows[0].sum_rate_bps > 0.0);
}

TEST_CASE("run_experiment validates its config") {
  ExperimentConfig cfg = small_config();
  cfg.n_trials = 0;
  CHECK_THROWS_AS(run_experiment(cfg), std::runtime_error);
}

TEST_CASE("timing on records positive elapsed time") {
  ExperimentConfig cfg = small_config();
  cfg.schemes = {"lem"};
  cfg.timing = true;
  const std::vector<TrialResult> rows = run_experiment(cfg);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].elapsed_ms > 0.0);
}

TEST_CASE("sweep_r deduplicates and sorts the grid") {
  ExperimentConfig cfg;
  cfg.k_values = {5};
  cfg.n_trials = 3;
  cfg.base_seed = 17;
  const std::vector<SweepEntry> entries =
      sweep_r(cfg, {0.8, 0.6, 0.8, 0.7});
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].r == 0.6);
  CHECK(entries[1].r == 0.7);
  CHECK(entries[2].r == 0.8);
  for (const SweepEntry& e : entries) {
    CHECK(e.k == 5);
    CHECK(e.n == 3);
    CHECK(e.mean_sum_rate_bps > 0.0);
  }
}

TEST_CASE("sweep_r near zero ratio schedules nearly everything") {
  ExperimentConfig cfg;
  cfg.k_values = {10};
  cfg.n_trials = 5;
  cfg.base_seed = 23;
  const std::vector<SweepEntry> entries = sweep_r(cfg, {0.01});
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].mean_activation_ratio >= 0.9);
}

TEST_CASE("sweep_r agrees with direct scheduling at the same ratio") {
  ExperimentConfig cfg;
  cfg.k_values = {6};
  cfg.n_trials = 4;
  cfg.base_seed = 29;
  const std::vector<SweepEntry> entries = sweep_r(cfg, {0.8});
  REQUIRE(entries.size() == 1);
  double rate_sum = 0.0;
  double ratio_sum = 0.0;
  for (int trial = 0; trial < cfg.n_trials; ++trial) {
    const TrialOutcome out = run_trial(cfg, 6, trial);
    rate_sum += out.outcome("lem").sum_rate_bps;
    ratio_sum += activation_ratio(out.outcome("lem").schedule);
  }
  CHECK(entries[0].mean_sum_rate_bps ==
        doctest::Approx(rate_sum / 4).epsilon(1e-12));
  CHECK(entries[0].mean_activation_ratio ==
        doctest::Approx(ratio_sum / 4).epsilon(1e-12));
}

TEST_CASE("sweep_r rejects ratios outside the open unit interval") {
  ExperimentConfig cfg = small_config();
  CHECK_THROWS_AS(sweep_r(cfg, {0.5, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(sweep_r(cfg, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(sweep_r(cfg, {}), std::invalid_argument);
}

TEST_CASE("sweep csv carries the documented header") {
  ExperimentConfig cfg;
  cfg.k_values = {4};
  cfg.n_trials = 2;
  cfg.base_seed = 37;
  std::ostringstream out;
  emit_sweep_csv(sweep_r(cfg, {0.5, 0.8}), out);
  const std::string text = out.str();
  CHECK(text.rfind("k,r,n,mean_sum_rate_bps,stderr_sum_rate_bps,"
                   "mean_activation_ratio,stderr_activation_ratio\n",
                   0) == 0);
  int lines = 0;
  for (char c : text) {
    if (c == '\n') {
      ++lines;
    }
  }
  CHECK(lines == 3);
}

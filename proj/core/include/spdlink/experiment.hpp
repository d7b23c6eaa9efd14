// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spdlink/config.hpp"
#include "spdlink/io.hpp"
#include "spdlink/scheduler.hpp"

namespace spdlink {

struct SchemeOutcome {
  std::string label;  // equals the scheme name, or "oracle-skipped"
  Schedule schedule;
  double sum_rate_bps = 0.0;
  double elapsed_ms = 0.0;
  bool skipped = false;
};

// Everything one trial produced: the layout, the realization seeds, and
// one outcome per requested scheme in config order. Every scheme sees
// the identical deployment and fading realization.
struct TrialOutcome {
  Deployment dep;
  std::uint64_t deployment_seed = 0;
  std::uint64_t fading_seed = 0;
  std::vector<SchemeOutcome> outcomes;

  const SchemeOutcome& outcome(const std::string& scheme) const;
};

// Seeding: deployment_seed = base_seed + trial; fading_seed derives
// from it on stream 1 and the random-scheme seed on stream 2, so the
// CSI-free schedules never depend on the fading draw.
TrialOutcome run_trial(const ExperimentConfig& cfg, int k, long long trial,
                       std::optional<std::uint64_t> fading_seed_override = {});

// Runs every (k, trial, scheme) cell. Trials execute on a bounded
// worker pool into preallocated slots; rows come out ordered by
// (k position, trial, scheme position), so thread count never changes
// the file content. With timing off, elapsed_ms is recorded as 0 and
// reruns of the same config are byte-identical.
std::vector<TrialResult> run_experiment(const ExperimentConfig& cfg);

struct SweepEntry {
  int k = 0;
  double r = 0.0;
  int n = 0;
  double mean_sum_rate_bps = 0.0;
  double stderr_sum_rate_bps = 0.0;
  double mean_activation_ratio = 0.0;
  double stderr_activation_ratio = 0.0;
};

inline constexpr const char* kSweepCsvHeader =
    "k,r,n,mean_sum_rate_bps,stderr_sum_rate_bps,mean_activation_ratio,"
    "stderr_activation_ratio";

// Reruns the position-based scheme at each ratio on identical layouts
// and realizations. Ratios are deduplicated and reported ascending;
// each must lie in (0, 1). Pairwise distances are shared across the
// whole grid within a layout.
std::vector<SweepEntry> sweep_r(const ExperimentConfig& cfg,
                                const std::vector<double>& r_values);

void emit_sweep_csv(const std::vector<SweepEntry>& rows, std::ostream& out);
void emit_sweep_csv(const std::vector<SweepEntry>& rows,
                    const std::string& path);

}  // namespace spdlink

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace spdlink {

struct TrialResult {
  long long trial_id = 0;
  int k = 0;
  std::string scheme;
  double sum_rate_bps = 0.0;
  double activation_ratio = 0.0;
  double elapsed_ms = 0.0;
  std::uint64_t deployment_seed = 0;
  std::uint64_t fading_seed = 0;
};

struct SummaryRow {
  int k = 0;
  std::string scheme;
  int n = 0;
  double mean_sum_rate_bps = 0.0;
  double stderr_sum_rate_bps = 0.0;
  double mean_activation_ratio = 0.0;
  double stderr_activation_ratio = 0.0;
};

inline constexpr const char* kResultsCsvHeader =
    "trial_id,k,scheme,sum_rate_bps,activation_ratio,elapsed_ms,"
    "deployment_seed,fading_seed";

inline constexpr const char* kSummaryCsvHeader =
    "k,scheme,n,mean_sum_rate_bps,stderr_sum_rate_bps,"
    "mean_activation_ratio,stderr_activation_ratio";

// Floats are rendered with 6 significant digits ("%.6g").
std::string format_g6(double v);

void emit_csv(const std::vector<TrialResult>& results, std::ostream& out);
void emit_csv(const std::vector<TrialResult>& results,
              const std::string& path);

std::vector<TrialResult> parse_results_csv(std::istream& in);
std::vector<TrialResult> load_results_csv(const std::string& path);

// Groups by (k, scheme), sorted by k then scheme name. The standard
// error is the Bessel-corrected sample deviation over sqrt(n); a single
// observation reports 0.
std::vector<SummaryRow> summarize(const std::vector<TrialResult>& results);

void emit_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out);
void emit_summary_csv(const std::vector<SummaryRow>& rows,
                      const std::string& path);

}  // namespace spdlink

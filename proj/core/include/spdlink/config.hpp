// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "spdlink/channel.hpp"
#include "spdlink/scheduler.hpp"

namespace spdlink {

// Complete experiment description. Defaults reproduce the reference
// simulation setup, so an empty config file is a valid experiment.
struct ExperimentConfig {
  std::vector<int> k_values{10, 20, 30, 40, 50};
  int n_trials = 200;
  std::vector<std::string> schemes{"lem", "greedy", "strongest", "random",
                                   "all"};
  ChannelParams channel;
  LemConfig lem;
  double area_side_m = 500.0;
  double r_min_m = 2.0;
  double r_max_m = 65.0;
  double random_activation_prob = 0.5;
  int oracle_k_max = 12;
  bool timing = false;  // off keeps result files byte-reproducible
  std::uint64_t base_seed = 1;
  std::string output_path = "results.csv";
  std::vector<double> sweep_r_values{0.5, 0.6, 0.7, 0.8, 0.9};
  int threads = 0;  // 0 = hardware concurrency
};

const std::vector<std::string>& valid_scheme_names();

// Flat "key = value" lines; '#' starts a comment; blank lines ignored.
// Unknown keys, unknown scheme names, and out-of-range values are hard
// errors. Values omitted keep their defaults.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_string(const std::string& text);
ExperimentConfig load_config(const std::string& path);

// Post-parse validation shared by every entry point.
void validate_config(const ExperimentConfig& cfg);

}  // namespace spdlink

// SPDX-License-Identifier: Apache-2.0
#include "spdlink/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace spdlink {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
    ++b;
  }
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
    --e;
  }
  return s.substr(b, e - b);
}

std::vector<std::string> split_list(const std::string& value) {
  std::string normalized = value;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream in(normalized);
  std::vector<std::string> items;
  std::string item;
  while (in >> item) {
    items.push_back(item);
  }
  return items;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) {
      throw std::invalid_argument(value);
    }
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad numeric value for '" + key +
                             "': " + value);
  }
}

long long parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(value, &pos);
    if (pos != value.size()) {
      throw std::invalid_argument(value);
    }
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad integer value for '" + key +
                             "': " + value);
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(value, &pos);
    if (pos != value.size() || value.front() == '-') {
      throw std::invalid_argument(value);
    }
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("config: bad seed value for '" + key +
                             "': " + value);
  }
}

bool parse_switch(const std::string& key, const std::string& value) {
  if (value == "on" || value == "true" || value == "1") {
    return true;
  }
  if (value == "off" || value == "false" || value == "0") {
    return false;
  }
  throw std::runtime_error("config: bad on/off value for '" + key +
                           "': " + value);
}

void apply(ExperimentConfig& cfg, const std::string& key,
           const std::string& value) {
  if (key == "k_values") {
    cfg.k_values.clear();
    for (const std::string& item : split_list(value)) {
      cfg.k_values.push_back(static_cast<int>(parse_int(key, item)));
    }
  } else if (key == "n_trials") {
    cfg.n_trials = static_cast<int>(parse_int(key, value));
  } else if (key == "schemes") {
    cfg.schemes = split_list(value);
  } else if (key == "p_tx_dbm") {
    cfg.channel.p_tx_dbm = parse_double(key, value);
  } else if (key == "fc_hz") {
    cfg.channel.fc_hz = parse_double(key, value);
  } else if (key == "h_ant_m") {
    cfg.channel.h_ant_m = parse_double(key, value);
  } else if (key == "g_ant_db") {
    cfg.channel.g_ant_db = parse_double(key, value);
  } else if (key == "n0_dbm_hz") {
    cfg.channel.n0_dbm_hz = parse_double(key, value);
  } else if (key == "bandwidth_hz") {
    cfg.channel.bandwidth_hz = parse_double(key, value);
  } else if (key == "gamma") {
    cfg.lem.gamma = parse_double(key, value);
  } else if (key == "r") {
    cfg.lem.r = parse_double(key, value);
  } else if (key == "area_side_m") {
    cfg.area_side_m = parse_double(key, value);
  } else if (key == "r_min_m") {
    cfg.r_min_m = parse_double(key, value);
  } else if (key == "r_max_m") {
    cfg.r_max_m = parse_double(key, value);
  } else if (key == "random_activation_prob") {
    cfg.random_activation_prob = parse_double(key, value);
  } else if (key == "oracle_k_max") {
    cfg.oracle_k_max = static_cast<int>(parse_int(key, value));
  } else if (key == "timing") {
    cfg.timing = parse_switch(key, value);
  } else if (key == "base_seed") {
    cfg.base_seed = parse_u64(key, value);
  } else if (key == "output_path") {
    cfg.output_path = value;
  } else if (key == "sweep_r_values") {
    cfg.sweep_r_values.clear();
    for (const std::string& item : split_list(value)) {
      cfg.sweep_r_values.push_back(parse_double(key, item));
    }
  } else if (key == "threads") {
    cfg.threads = static_cast<int>(parse_int(key, value));
  } else {
    throw std::runtime_error("config: unknown key '" + key + "'");
  }
}

}  // namespace

const std::vector<std::string>& valid_scheme_names() {
  static const std::vector<std::string> names{"lem",    "greedy", "strongest",
                                              "random", "all",    "oracle"};
  return names;
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string stripped = trim(line);
    if (stripped.empty()) {
      continue;
    }
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config: line " + std::to_string(line_no) +
                               " is not 'key = value'");
    }
    apply(cfg, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
  }
  validate_config(cfg);
  return cfg;
}

ExperimentConfig parse_config_string(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("config: cannot open " + path);
  }
  return parse_config(in);
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.k_values.empty()) {
    throw std::runtime_error("config: k_values must be nonempty");
  }
  for (int k : cfg.k_values) {
    if (k < 1) {
      throw std::runtime_error("config: every k must be >= 1");
    }
  }
  if (cfg.n_trials < 1) {
    throw std::runtime_error("config: n_trials must be >= 1");
  }
  if (cfg.schemes.empty()) {
    throw std::runtime_error("config: schemes must be nonempty");
  }
  const auto& names = valid_scheme_names();
  for (const std::string& s : cfg.schemes) {
    if (std::find(names.begin(), names.end(), s) == names.end()) {
      throw std::runtime_error("config: unknown scheme '" + s + "'");
    }
  }
  if (!(cfg.channel.fc_hz > 0.0) || !(cfg.channel.h_ant_m > 0.0) ||
      !(cfg.channel.bandwidth_hz > 0.0)) {
    throw std::runtime_error(
        "config: fc_hz, h_ant_m, and bandwidth_hz must be positive");
  }
  if (!(cfg.lem.gamma > 0.0)) {
    throw std::runtime_error("config: gamma must be positive");
  }
  if (!(cfg.lem.r > 0.0 && cfg.lem.r < 1.0)) {
    throw std::runtime_error("config: r must lie in (0, 1)");
  }
  if (!(0.0 < cfg.r_min_m && cfg.r_min_m < cfg.r_max_m &&
        cfg.r_max_m < cfg.area_side_m)) {
    throw std::runtime_error(
        "config: require 0 < r_min_m < r_max_m < area_side_m");
  }
  if (!(cfg.random_activation_prob >= 0.0 &&
        cfg.random_activation_prob <= 1.0)) {
    throw std::runtime_error(
        "config: random_activation_prob must lie in [0, 1]");
  }
  if (cfg.oracle_k_max < 1) {
    throw std::runtime_error("config: oracle_k_max must be >= 1");
  }
  if (cfg.threads < 0) {
    throw std::runtime_error("config: threads must be >= 0");
  }
  for (double r : cfg.sweep_r_values) {
    if (!(r > 0.0 && r < 1.0)) {
      throw std::runtime_error("config: sweep_r_values must lie in (0, 1)");
    }
  }
}

}  // namespace spdlink

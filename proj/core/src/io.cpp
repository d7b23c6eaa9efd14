// SPDX-License-Identifier: Apache-2.0
#include "spdlink/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace spdlink {
namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}

struct Accumulator {
  int n = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double v) {
    ++n;
    sum += v;
    sum_sq += v * v;
  }
  double mean() const { return sum / n; }
  double stderr_mean() const {
    if (n < 2) {
      return 0.0;
    }
    const double m = mean();
    double var = (sum_sq - static_cast<double>(n) * m * m) / (n - 1);
    var = std::max(var, 0.0);
    return std::sqrt(var / n);
  }
};

}  // namespace

std::string format_g6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void emit_csv(const std::vector<TrialResult>& results, std::ostream& out) {
  out << kResultsCsvHeader << '\n';
  for (const TrialResult& r : results) {
    out << r.trial_id << ',' << r.k << ',' << r.scheme << ','
        << format_g6(r.sum_rate_bps) << ',' << format_g6(r.activation_ratio)
        << ',' << format_g6(r.elapsed_ms) << ',' << r.deployment_seed << ','
        << r.fading_seed << '\n';
  }
}

void emit_csv(const std::vector<TrialResult>& results,
              const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw std::runtime_error("emit_csv: cannot open " + path);
  }
  emit_csv(results, out);
  if (!out) {
    throw std::runtime_error("emit_csv: write failed for " + path);
  }
}

std::vector<TrialResult> parse_results_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kResultsCsvHeader) {
    throw std::runtime_error("parse_results_csv: bad or missing header");
  }
  std::vector<TrialResult> results;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 8) {
      throw std::runtime_error("parse_results_csv: line " +
                               std::to_string(line_no) +
                               " does not have 8 fields");
    }
    try {
      TrialResult r;
      r.trial_id = std::stoll(f[0]);
      r.k = std::stoi(f[1]);
      r.scheme = f[2];
      r.sum_rate_bps = std::stod(f[3]);
      r.activation_ratio = std::stod(f[4]);
      r.elapsed_ms = std::stod(f[5]);
      r.deployment_seed = std::stoull(f[6]);
      r.fading_seed = std::stoull(f[7]);
      results.push_back(std::move(r));
    } catch (const std::exception&) {
      throw std::runtime_error("parse_results_csv: malformed line " +
                               std::to_string(line_no));
    }
  }
  return results;
}

std::vector<TrialResult> load_results_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("load_results_csv: cannot open " + path);
  }
  return parse_results_csv(in);
}

std::vector<SummaryRow> summarize(const std::vector<TrialResult>& results) {
  std::map<std::pair<int, std::string>, std::pair<Accumulator, Accumulator>>
      groups;
  for (const TrialResult& r : results) {
    auto& [rate, ratio] = groups[{r.k, r.scheme}];
    rate.add(r.sum_rate_bps);
    ratio.add(r.activation_ratio);
  }
  std::vector<SummaryRow> rows;
  rows.reserve(groups.size());
  for (const auto& [key, acc] : groups) {
    SummaryRow row;
    row.k = key.first;
    row.scheme = key.second;
    row.n = acc.first.n;
    row.mean_sum_rate_bps = acc.first.mean();
    row.stderr_sum_rate_bps = acc.first.stderr_mean();
    row.mean_activation_ratio = acc.second.mean();
    row.stderr_activation_ratio = acc.second.stderr_mean();
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit_summary_csv(const std::vector<SummaryRow>& rows,
                      std::ostream& out) {
  out << kSummaryCsvHeader << '\n';
  for (const SummaryRow& r : rows) {
    out << r.k << ',' << r.scheme << ',' << r.n << ','
        << format_g6(r.mean_sum_rate_bps) << ','
        << format_g6(r.stderr_sum_rate_bps) << ','
        << format_g6(r.mean_activation_ratio) << ','
        << format_g6(r.stderr_activation_ratio) << '\n';
  }
}

void emit_summary_csv(const std::vector<SummaryRow>& rows,
                      const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw std::runtime_error("emit_summary_csv: cannot open " + path);
  }
  emit_summary_csv(rows, out);
  if (!out) {
    throw std::runtime_error("emit_summary_csv: write failed for " + path);
  }
}

}  // namespace spdlink

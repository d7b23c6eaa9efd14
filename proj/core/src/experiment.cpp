// SPDX-License-Identifier: Apache-2.0
#include "spdlink/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "spdlink/rng.hpp"

namespace spdlink {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// Runs fn(i) for i in [0, n) on up to `threads` workers. Exceptions are
// captured and the first one rethrown after all workers finish.
void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
  }
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<int> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n) {
        return;
      }
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) {
          first_error = std::current_exception();
        }
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back(worker);
  }
  for (std::thread& t : pool) {
    t.join();
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }
}

SchemeOutcome run_scheme(const ExperimentConfig& cfg, const std::string& name,
                         const Deployment& dep, const ChannelRealization& g,
                         std::uint64_t deployment_seed) {
  SchemeOutcome out;
  out.label = name;
  const auto start = Clock::now();
  if (name == "lem") {
    out.schedule = schedule_lem(dep, cfg.lem);
  } else if (name == "greedy") {
    out.schedule = schedule_greedy(g, cfg.channel);
  } else if (name == "strongest") {
    out.schedule = schedule_strongest(g);
  } else if (name == "random") {
    out.schedule = schedule_random(dep.k, cfg.random_activation_prob,
                                   derive_seed(deployment_seed, 2));
  } else if (name == "all") {
    out.schedule = schedule_all(dep.k);
  } else if (name == "oracle") {
    if (dep.k > cfg.oracle_k_max) {
      out.label = "oracle-skipped";
      out.skipped = true;
      out.schedule = schedule_from_z({}, dep.k, "oracle-skipped");
      out.elapsed_ms = cfg.timing ? ms_since(start) : 0.0;
      return out;
    }
    out.schedule = schedule_exhaustive(g, cfg.channel, cfg.oracle_k_max);
  } else {
    throw std::runtime_error("run_trial: unknown scheme '" + name + "'");
  }
  out.sum_rate_bps =
      sum_rate(out.schedule.x, g, cfg.channel.p_tx_watts(),
               noise_power_watts(cfg.channel.n0_dbm_hz,
                                 cfg.channel.bandwidth_hz),
               cfg.channel.bandwidth_hz);
  out.elapsed_ms = cfg.timing ? ms_since(start) : 0.0;
  return out;
}

}  // namespace

const SchemeOutcome& TrialOutcome::outcome(const std::string& scheme) const {
  for (const SchemeOutcome& o : outcomes) {
    if (o.label == scheme) {
      return o;
    }
  }
  throw std::out_of_range("TrialOutcome: no outcome for scheme " + scheme);
}

TrialOutcome run_trial(const ExperimentConfig& cfg, int k, long long trial,
                       std::optional<std::uint64_t> fading_seed_override) {
  if (k < 1) {
    throw std::invalid_argument("run_trial: k must be >= 1");
  }
  TrialOutcome out;
  out.deployment_seed = cfg.base_seed + static_cast<std::uint64_t>(trial);
  out.dep = gen_deployment(k, cfg.area_side_m, cfg.r_min_m, cfg.r_max_m,
                           out.deployment_seed);
  out.fading_seed =
      fading_seed_override.value_or(derive_seed(out.deployment_seed, 1));
  const Eigen::MatrixXd fading = draw_fading(k, out.fading_seed);
  const ChannelRealization g =
      gain_matrix(out.dep, fading, cfg.channel, out.fading_seed);
  out.outcomes.reserve(cfg.schemes.size());
  for (const std::string& scheme : cfg.schemes) {
    out.outcomes.push_back(
        run_scheme(cfg, scheme, out.dep, g, out.deployment_seed));
  }
  return out;
}

std::vector<TrialResult> run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  for (int k : cfg.k_values) {
    if (k > cfg.oracle_k_max &&
        std::find(cfg.schemes.begin(), cfg.schemes.end(), "oracle") !=
            cfg.schemes.end()) {
      std::cerr << "warning: oracle skipped at k=" << k
                << " (exceeds oracle_k_max=" << cfg.oracle_k_max << ")\n";
    }
  }
  const int cells = static_cast<int>(cfg.k_values.size()) * cfg.n_trials;
  std::vector<TrialOutcome> outcomes(cells);
  parallel_for(cells, cfg.threads, [&](int cell) {
    const int k = cfg.k_values[cell / cfg.n_trials];
    const long long trial = cell % cfg.n_trials;
    outcomes[cell] = run_trial(cfg, k, trial);
  });
  std::vector<TrialResult> rows;
  rows.reserve(static_cast<std::size_t>(cells) * cfg.schemes.size());
  for (int cell = 0; cell < cells; ++cell) {
    const TrialOutcome& out = outcomes[cell];
    for (const SchemeOutcome& so : out.outcomes) {
      TrialResult row;
      row.trial_id = cell % cfg.n_trials;
      row.k = cfg.k_values[cell / cfg.n_trials];
      row.scheme = so.label;
      row.sum_rate_bps = so.sum_rate_bps;
      row.activation_ratio = so.skipped ? 0.0 : activation_ratio(so.schedule);
      row.elapsed_ms = so.elapsed_ms;
      row.deployment_seed = out.deployment_seed;
      row.fading_seed = out.fading_seed;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<SweepEntry> sweep_r(const ExperimentConfig& cfg,
                                const std::vector<double>& r_values) {
  validate_config(cfg);
  for (double r : r_values) {
    if (!(r > 0.0 && r < 1.0)) {
      throw std::invalid_argument("sweep_r: every r must lie in (0, 1)");
    }
  }
  std::vector<double> grid(r_values);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.empty()) {
    throw std::invalid_argument("sweep_r: r grid is empty");
  }

  struct Cell {
    std::vector<double> rates;
    std::vector<double> ratios;
  };
  const int nk = static_cast<int>(cfg.k_values.size());
  const int nr = static_cast<int>(grid.size());
  std::vector<Cell> cells(static_cast<std::size_t>(nk) * nr);
  for (Cell& c : cells) {
    c.rates.resize(cfg.n_trials);
    c.ratios.resize(cfg.n_trials);
  }

  const double p = cfg.channel.p_tx_watts();
  const double sigma2 =
      noise_power_watts(cfg.channel.n0_dbm_hz, cfg.channel.bandwidth_hz);
  const int jobs = nk * cfg.n_trials;
  parallel_for(jobs, cfg.threads, [&](int job) {
    const int ki = job / cfg.n_trials;
    const long long trial = job % cfg.n_trials;
    const int k = cfg.k_values[ki];
    const std::uint64_t dep_seed =
        cfg.base_seed + static_cast<std::uint64_t>(trial);
    const Deployment dep =
        gen_deployment(k, cfg.area_side_m, cfg.r_min_m, cfg.r_max_m, dep_seed);
    const std::uint64_t fading_seed = derive_seed(dep_seed, 1);
    const ChannelRealization g = gain_matrix(
        dep, draw_fading(k, fading_seed), cfg.channel, fading_seed);
    LemScheduler scheduler(dep, cfg.lem.gamma);
    for (int ri = 0; ri < nr; ++ri) {
      const Schedule s = scheduler.run(grid[ri]);
      Cell& c = cells[static_cast<std::size_t>(ki) * nr + ri];
      c.rates[trial] = sum_rate(s.x, g, p, sigma2, cfg.channel.bandwidth_hz);
      c.ratios[trial] = activation_ratio(s);
    }
  });

  auto mean_of = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) {
      s += x;
    }
    return s / static_cast<double>(v.size());
  };
  auto stderr_of = [&](const std::vector<double>& v) {
    if (v.size() < 2) {
      return 0.0;
    }
    const double m = mean_of(v);
    double ss = 0.0;
    for (double x : v) {
      ss += (x - m) * (x - m);
    }
    return std::sqrt(ss / (static_cast<double>(v.size()) - 1.0) /
                     static_cast<double>(v.size()));
  };

  std::vector<SweepEntry> entries;
  entries.reserve(cells.size());
  for (int ki = 0; ki < nk; ++ki) {
    for (int ri = 0; ri < nr; ++ri) {
      const Cell& c = cells[static_cast<std::size_t>(ki) * nr + ri];
      SweepEntry e;
      e.k = cfg.k_values[ki];
      e.r = grid[ri];
      e.n = cfg.n_trials;
      e.mean_sum_rate_bps = mean_of(c.rates);
      e.stderr_sum_rate_bps = stderr_of(c.rates);
      e.mean_activation_ratio = mean_of(c.ratios);
      e.stderr_activation_ratio = stderr_of(c.ratios);
      entries.push_back(e);
    }
  }
  return entries;
}

void emit_sweep_csv(const std::vector<SweepEntry>& rows, std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  for (const SweepEntry& e : rows) {
    out << e.k << ',' << format_g6(e.r) << ',' << e.n << ','
        << format_g6(e.mean_sum_rate_bps) << ','
        << format_g6(e.stderr_sum_rate_bps) << ','
        << format_g6(e.mean_activation_ratio) << ','
        << format_g6(e.stderr_activation_ratio) << '\n';
  }
}

void emit_sweep_csv(const std::vector<SweepEntry>& rows,
                    const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw std::runtime_error("emit_sweep_csv: cannot open " + path);
  }
  emit_sweep_csv(rows, out);
  if (!out) {
    throw std::runtime_error("emit_sweep_csv: write failed for " + path);
  }
}

}  // namespace spdlink

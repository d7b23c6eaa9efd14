// SPDX-License-Identifier: Apache-2.0
#include "spdlink/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "spdlink/manifold.hpp"
#include "spdlink/rng.hpp"

namespace spdlink {
namespace {

void check_ratio(double r) {
  if (!(r > 0.0 && r < 1.0)) {
    throw std::invalid_argument("threshold ratio r must lie in (0, 1)");
  }
}

void check_gamma(double gamma) {
  if (!(gamma > 0.0)) {
    throw std::invalid_argument("gamma must be positive");
  }
}

std::vector<int> snr_descending_order(const ChannelRealization& g) {
  std::vector<int> order(g.k());
  for (int i = 0; i < g.k(); ++i) {
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.gain(a, a) > g.gain(b, b);
  });
  return order;
}

}  // namespace

Schedule schedule_from_z(const std::vector<int>& z, int k,
                         std::string scheme) {
  Schedule s;
  s.scheme = std::move(scheme);
  s.x.assign(k, 0);
  s.z = z;
  for (int i : z) {
    if (i < 0 || i >= k) {
      throw std::out_of_range("schedule_from_z: pair index out of range");
    }
    if (s.x[i]) {
      throw std::invalid_argument("schedule_from_z: duplicate pair index");
    }
    s.x[i] = 1;
  }
  return s;
}

double activation_ratio(const Schedule& s) {
  if (s.x.empty()) {
    return 0.0;
  }
  return static_cast<double>(s.z.size()) / static_cast<double>(s.x.size());
}

std::vector<int> sort_by_direct_distance(const Deployment& dep) {
  std::vector<int> order(dep.k);
  for (int i = 0; i < dep.k; ++i) {
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return direct_distance(dep, a) < direct_distance(dep, b);
  });
  return order;
}

LemScheduler::LemScheduler(Deployment dep, double gamma)
    : dep_(std::move(dep)),
      gamma_(gamma),
      idx_{dep_.k},
      order_(sort_by_direct_distance(dep_)),
      single_logs_(dep_.k),
      dist_memo_(static_cast<std::size_t>(dep_.k) * dep_.k,
                 std::numeric_limits<double>::quiet_NaN()) {
  check_gamma(gamma_);
}

const Eigen::MatrixXd& LemScheduler::single_log(int i) {
  if (!single_logs_[i]) {
    single_logs_[i] = logm(single_pair_spd(i, idx_, gamma_));
  }
  return *single_logs_[i];
}

double LemScheduler::pair_distance(int k1, int k2) {
  const std::size_t key = static_cast<std::size_t>(k1) * dep_.k + k2;
  if (std::isnan(dist_memo_[key])) {
    const SpdMatrix joint = pair_pair_spd(k1, k2, dep_, gamma_);
    dist_memo_[key] =
        std::sqrt(log_frobenius_sq(logm(joint), single_log(k1)));
  }
  return dist_memo_[key];
}

double LemScheduler::threshold(double r) {
  check_ratio(r);
  if (dep_.k < 2) {
    throw std::invalid_argument(
        "threshold: needs at least two pairs to measure against");
  }
  const int first = order_[0];
  double max_dist = 0.0;
  for (int k2 = 0; k2 < dep_.k; ++k2) {
    if (k2 != first) {
      max_dist = std::max(max_dist, pair_distance(first, k2));
    }
  }
  return r * max_dist;
}

Schedule LemScheduler::run(double r) {
  check_ratio(r);
  if (dep_.k == 1) {
    return schedule_from_z({0}, 1, "lem");
  }
  const double delta = threshold(r);
  std::vector<int> z{order_[0]};
  for (std::size_t t = 1; t < order_.size(); ++t) {
    const int k2 = order_[t];
    double min_dist = std::numeric_limits<double>::infinity();
    for (int k1 : z) {
      min_dist = std::min(min_dist, pair_distance(k1, k2));
    }
    if (min_dist >= delta) {
      z.push_back(k2);
    }
  }
  return schedule_from_z(z, dep_.k, "lem");
}

double compute_threshold(const Deployment& dep, int first,
                         const LemConfig& cfg) {
  if (first < 0 || first >= dep.k) {
    throw std::out_of_range("compute_threshold: first index out of range");
  }
  LemScheduler scheduler(dep, cfg.gamma);
  if (dep.k < 2) {
    throw std::invalid_argument(
        "compute_threshold: needs at least two pairs");
  }
  check_ratio(cfg.r);
  double max_dist = 0.0;
  for (int k2 = 0; k2 < dep.k; ++k2) {
    if (k2 != first) {
      max_dist = std::max(max_dist, scheduler.pair_distance(first, k2));
    }
  }
  return cfg.r * max_dist;
}

Schedule schedule_lem(const Deployment& dep, const LemConfig& cfg) {
  LemScheduler scheduler(dep, cfg.gamma);
  return scheduler.run(cfg.r);
}

Schedule schedule_greedy(const ChannelRealization& g,
                         const ChannelParams& params) {
  const int k = g.k();
  const double p = params.p_tx_watts();
  const double sigma2 = noise_power_watts(params.n0_dbm_hz,
                                          params.bandwidth_hz);
  std::vector<int> x(k, 0);
  std::vector<int> z;
  // current_rate is nondecreasing across iterations: links are kept only
  // when the tentative rate does not fall below it.
  double current_rate = 0.0;
  for (int i : snr_descending_order(g)) {
    x[i] = 1;
    const double tentative_rate =
        sum_rate(x, g, p, sigma2, params.bandwidth_hz);
    if (tentative_rate >= current_rate) {
      current_rate = tentative_rate;
      z.push_back(i);
    } else {
      x[i] = 0;
    }
  }
  return schedule_from_z(z, k, "greedy");
}

Schedule schedule_strongest(const ChannelRealization& g) {
  int best = 0;
  for (int i = 1; i < g.k(); ++i) {
    if (g.gain(i, i) > g.gain(best, best)) {
      best = i;
    }
  }
  return schedule_from_z({best}, g.k(), "strongest");
}

Schedule schedule_random(int k, double activation_prob, std::uint64_t seed) {
  if (k < 1) {
    throw std::invalid_argument("schedule_random: k must be >= 1");
  }
  if (!(activation_prob >= 0.0 && activation_prob <= 1.0)) {
    throw std::invalid_argument(
        "schedule_random: activation probability must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<int> z;
  for (int i = 0; i < k; ++i) {
    if (rng.uniform01() < activation_prob) {
      z.push_back(i);
    }
  }
  return schedule_from_z(z, k, "random");
}

Schedule schedule_all(int k) {
  if (k < 1) {
    throw std::invalid_argument("schedule_all: k must be >= 1");
  }
  std::vector<int> z(k);
  for (int i = 0; i < k; ++i) {
    z[i] = i;
  }
  return schedule_from_z(z, k, "all");
}

Schedule schedule_exhaustive(const ChannelRealization& g,
                             const ChannelParams& params, int k_max_guard) {
  const int k = g.k();
  if (k > k_max_guard) {
    throw std::out_of_range(
        "schedule_exhaustive: k exceeds the enumeration guard");
  }
  const double p = params.p_tx_watts();
  const double sigma2 = noise_power_watts(params.n0_dbm_hz,
                                          params.bandwidth_hz);
  std::vector<int> x(k, 0);
  std::vector<int> best_z;
  double best_rate = -1.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> z;
    for (int i = 0; i < k; ++i) {
      x[i] = (mask >> i) & 1u;
      if (x[i]) {
        z.push_back(i);
      }
    }
    const double rate = sum_rate(x, g, p, sigma2, params.bandwidth_hz);
    const bool better =
        rate > best_rate ||
        (rate == best_rate &&
         (z.size() < best_z.size() ||
          (z.size() == best_z.size() && z < best_z)));
    if (better) {
      best_rate = rate;
      best_z = z;
    }
  }
  return schedule_from_z(best_z, k, "oracle");
}

}  // namespace spdlink

// SPDX-License-Identifier: Apache-2.0
#include "spdlink/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "spdlink/rng.hpp"

namespace spdlink {
namespace {

// Rounded propagation speed; the breakpoint then lands on round meters
// for the default carrier and antenna heights.
constexpr double kSpeedOfLight = 3.0e8;
constexpr double kPi = 3.1415926535897932384626433832795;

}  // namespace

double itu1411_pathloss_db(double d_m, double fc_hz, double h_tx_m,
                           double h_rx_m) {
  if (!(d_m > 0.0)) {
    throw std::invalid_argument("itu1411_pathloss_db: d must be positive");
  }
  if (!(fc_hz > 0.0) || !(h_tx_m > 0.0) || !(h_rx_m > 0.0)) {
    throw std::invalid_argument(
        "itu1411_pathloss_db: fc and antenna heights must be positive");
  }
  const double lambda = kSpeedOfLight / fc_hz;
  const double r_bp = 4.0 * h_tx_m * h_rx_m / lambda;
  const double l_bp =
      std::abs(20.0 * std::log10(lambda * lambda / (8.0 * kPi * h_tx_m * h_rx_m)));
  const double slope = (d_m <= r_bp) ? 20.0 : 40.0;
  return l_bp + 6.0 + slope * std::log10(d_m / r_bp);
}

Eigen::MatrixXd draw_fading(int k, std::uint64_t seed) {
  if (k < 1) {
    throw std::invalid_argument("draw_fading: k must be >= 1");
  }
  Rng rng(seed);
  Eigen::MatrixXd f(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      f(i, j) = rng.exponential();
    }
  }
  return f;
}

ChannelRealization gain_matrix(const Deployment& dep,
                               const Eigen::MatrixXd& fading,
                               const ChannelParams& params,
                               std::uint64_t fading_seed) {
  if (fading.rows() != dep.k || fading.cols() != dep.k) {
    throw std::invalid_argument("gain_matrix: fading dimension mismatch");
  }
  const double ant_db = 2.0 * params.g_ant_db;
  Eigen::MatrixXd g(dep.k, dep.k);
  for (int i = 0; i < dep.k; ++i) {
    for (int j = 0; j < dep.k; ++j) {
      const double d = euclidean(dep.tx[j], dep.rx[i]);
      const double pl =
          itu1411_pathloss_db(d, params.fc_hz, params.h_ant_m, params.h_ant_m);
      g(i, j) = db_to_linear(ant_db - pl) * fading(i, j);
    }
  }
  return {std::move(g), fading_seed};
}

double noise_power_watts(double n0_dbm_hz, double bandwidth_hz) {
  if (!(bandwidth_hz > 0.0)) {
    throw std::invalid_argument(
        "noise_power_watts: bandwidth must be positive");
  }
  return dbm_to_watts(n0_dbm_hz + 10.0 * std::log10(bandwidth_hz));
}

double sum_rate(const std::vector<int>& x, const ChannelRealization& g,
                double p_tx_watts, double sigma2_watts, double bandwidth_hz) {
  const int k = g.k();
  if (static_cast<int>(x.size()) != k) {
    throw std::invalid_argument("sum_rate: schedule dimension mismatch");
  }
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    if (!x[i]) {
      continue;
    }
    double interference = 0.0;
    for (int j = 0; j < k; ++j) {
      if (j != i && x[j]) {
        interference += p_tx_watts * g.gain(i, j);
      }
    }
    const double sinr =
        p_tx_watts * g.gain(i, i) / (interference + sigma2_watts);
    total += bandwidth_hz * std::log2(1.0 + sinr);
  }
  return total;
}

}  // namespace spdlink

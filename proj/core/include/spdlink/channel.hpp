// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "spdlink/geometry.hpp"

namespace spdlink {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double v) { return 10.0 * std::log10(v); }
inline double dbm_to_watts(double dbm) { return db_to_linear(dbm - 30.0); }

struct ChannelParams {
  double p_tx_dbm = 40.0;
  double fc_hz = 2.4e9;
  double h_ant_m = 1.5;
  double g_ant_db = 2.5;  // per antenna; applied at both ends
  double n0_dbm_hz = -169.0;
  double bandwidth_hz = 5e6;

  double p_tx_watts() const { return dbm_to_watts(p_tx_dbm); }
};

// Linear power gains, entry (i, j) = antenna gains x path-loss gain x
// fading power between transmitter j and receiver i.
struct ChannelRealization {
  Eigen::MatrixXd gain;
  std::uint64_t seed = 0;

  int k() const { return static_cast<int>(gain.rows()); }
};

// LOS median path loss with a two-slope breakpoint: 20 dB/decade up to
// R_bp = 4 h_tx h_rx fc / c, then 40 dB/decade, on a floor of
// |20 log10(lambda^2 / (8 pi h_tx h_rx))| + 6 dB.
double itu1411_pathloss_db(double d_m, double fc_hz, double h_tx_m,
                           double h_rx_m);

// K x K matrix of unit-mean exponential fading powers (Rayleigh
// amplitudes), drawn row-major, deterministic per seed.
Eigen::MatrixXd draw_fading(int k, std::uint64_t seed);

ChannelRealization gain_matrix(const Deployment& dep,
                               const Eigen::MatrixXd& fading,
                               const ChannelParams& params,
                               std::uint64_t fading_seed);

// sigma^2 = 10^((n0 + 10 log10(B) - 30) / 10) watts.
double noise_power_watts(double n0_dbm_hz, double bandwidth_hz);

// Sum over active links of B log2(1 + SINR). Inactive links contribute
// nothing, to either the sum or any denominator.
double sum_rate(const std::vector<int>& x, const ChannelRealization& g,
                double p_tx_watts, double sigma2_watts, double bandwidth_hz);

}  // namespace spdlink

// SPDX-License-Identifier: Apache-2.0
#include "spdlink/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

#include "spdlink/rng.hpp"

using namespace spdlink;

namespace {

Deployment two_pair_layout(Point2D tx0, Point2D rx0, Point2D tx1,
                           Point2D rx1) {
  Deployment dep;
  dep.k = 2;
  dep.area_side = 500.0;
  dep.tx = {tx0, tx1};
  dep.rx = {rx0, rx1};
  return dep;
}

}  // namespace

TEST_CASE("decibel helpers") {
  CHECK(db_to_linear(10.0) == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(db_to_linear(0.0) == 1.0);
  CHECK(linear_to_db(100.0) == doctest::Approx(20.0).epsilon(1e-14));
  CHECK(dbm_to_watts(30.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(dbm_to_watts(0.0) == doctest::Approx(1e-3).epsilon(1e-14));
  CHECK(dbm_to_watts(40.0) == doctest::Approx(10.0).epsilon(1e-14));
}

TEST_CASE("path loss hits the frozen breakpoint values") {
  // fc = 2.4 GHz, h = 1.5 m: lambda = 0.125 m, R_bp = 4*1.5*1.5/0.125 = 72 m.
  const double fc = 2.4e9;
  const double h = 1.5;
  CHECK(itu1411_pathloss_db(72.0, fc, h, h) ==
        doctest::Approx(77.17204703562655).epsilon(1e-12));
  CHECK(itu1411_pathloss_db(10.0, fc, h, h) ==
        doctest::Approx(60.02539710700118).epsilon(1e-12));
  CHECK(itu1411_pathloss_db(720.0, fc, h, h) ==
        doctest::Approx(117.17204703562655).epsilon(1e-12));
}

TEST_CASE("path loss slopes are 20 then 40 dB per decade") {
  const double fc = 2.4e9;
  const double h = 1.5;
  const double below = itu1411_pathloss_db(20.0, fc, h, h) -
                       itu1411_pathloss_db(2.0, fc, h, h);
  CHECK(below == doctest::Approx(20.0).epsilon(1e-12));
  const double above = itu1411_pathloss_db(1000.0, fc, h, h) -
                       itu1411_pathloss_db(100.0, fc, h, h);
  CHECK(above == doctest::Approx(40.0).epsilon(1e-12));
  CHECK(itu1411_pathloss_db(100.0, fc, h, h) >
        itu1411_pathloss_db(80.0, fc, h, h));
}

TEST_CASE("path loss rejects non-positive inputs") {
  CHECK_THROWS_AS(itu1411_pathloss_db(0.0, 2.4e9, 1.5, 1.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(itu1411_pathloss_db(-3.0, 2.4e9, 1.5, 1.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(itu1411_pathloss_db(10.0, 0.0, 1.5, 1.5),
                  std::invalid_argument);
}

TEST_CASE("fading is deterministic, positive, and row-major") {
  const Eigen::MatrixXd a = draw_fading(6, 99);
  const Eigen::MatrixXd b = draw_fading(6, 99);
  CHECK((a - b).norm() == 0.0);
  CHECK(a.minCoeff() > 0.0);
  Rng rng(99);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      CHECK(a(i, j) == rng.exponential());
    }
  }
}

TEST_CASE("fading powers have unit mean") {
  const Eigen::MatrixXd f = draw_fading(1000, 5150);
  CHECK(f.mean() == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("symmetric geometry with flat fading gives symmetric cross gains") {
  const Deployment dep = two_pair_layout({0.0, 0.0}, {20.0, 0.0},
                                         {20.0, 30.0}, {0.0, 30.0});
  // d(tx0, rx1) = d(tx1, rx0) by construction.
  const ChannelParams params;
  const ChannelRealization g =
      gain_matrix(dep, Eigen::MatrixXd::Ones(2, 2), params, 0);
  CHECK(g.gain(0, 1) / g.gain(1, 0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("gain falls by 2^-4 when distance doubles beyond the breakpoint") {
  const Deployment dep = two_pair_layout({0.0, 0.0}, {100.0, 0.0},
                                         {0.0, 300.0}, {200.0, 300.0});
  const ChannelParams params;
  const ChannelRealization g =
      gain_matrix(dep, Eigen::MatrixXd::Ones(2, 2), params, 0);
  // Direct links at 100 m and 200 m, both past R_bp = 72 m.
  CHECK(g.gain(1, 1) / g.gain(0, 0) == doctest::Approx(0.0625).epsilon(1e-12));
}

TEST_CASE("gain composes antenna gains, path loss, and fading") {
  const Deployment dep = two_pair_layout({0.0, 0.0}, {50.0, 0.0},
                                         {0.0, 200.0}, {90.0, 200.0});
  ChannelParams params;
  params.g_ant_db = 0.0;
  const ChannelRealization g =
      gain_matrix(dep, Eigen::MatrixXd::Ones(2, 2), params, 0);
  // With zero antenna gain and unit fading, the gain is 10^(-PL/10);
  // a hypothetical PL of 0 dB would give exactly 1.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double d = euclidean(dep.tx[j], dep.rx[i]);
      const double pl =
          itu1411_pathloss_db(d, params.fc_hz, params.h_ant_m, params.h_ant_m);
      CHECK(g.gain(i, j) / db_to_linear(-pl) ==
            doctest::Approx(1.0).epsilon(1e-14));
    }
  }

  ChannelParams with_ant = params;
  with_ant.g_ant_db = 2.5;
  const ChannelRealization g2 =
      gain_matrix(dep, Eigen::MatrixXd::Ones(2, 2), with_ant, 0);
  // 2.5 dB at each end: a factor 10^(5/10) over the zero-gain case.
  CHECK(g2.gain(0, 0) / g.gain(0, 0) ==
        doctest::Approx(db_to_linear(5.0)).epsilon(1e-12));
}

TEST_CASE("gain_matrix rejects fading dimension mismatch") {
  const Deployment dep = two_pair_layout({0.0, 0.0}, {10.0, 0.0},
                                         {30.0, 0.0}, {40.0, 0.0});
  const ChannelParams params;
  CHECK_THROWS_AS(gain_matrix(dep, Eigen::MatrixXd::Ones(3, 3), params, 0),
                  std::invalid_argument);
}

TEST_CASE("noise power matches the frozen thermal floor") {
  // Ratio form: the raw values are ~1e-14, far below Approx's unit scale.
  CHECK(noise_power_watts(-169.0, 5e6) / 6.29462705897083e-14 ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(linear_to_db(noise_power_watts(-169.0, 5e6)) + 30.0 ==
        doctest::Approx(-102.01029995663981).epsilon(1e-12));
  CHECK(noise_power_watts(-169.0, 1.0) / std::pow(10.0, -19.9) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(noise_power_watts(0.0, 1.0) == doctest::Approx(1e-3).epsilon(1e-14));
  CHECK_THROWS_AS(noise_power_watts(-169.0, 0.0), std::invalid_argument);
}

TEST_CASE("sum_rate of a unit-SINR link is the bandwidth") {
  ChannelRealization g;
  g.gain = Eigen::MatrixXd::Zero(1, 1);
  g.gain(0, 0) = 1e-10;
  // p g / sigma^2 = 10 * 1e-10 / 1e-9 = 1, so log2(2) = 1.
  CHECK(sum_rate({1}, g, 10.0, 1e-9, 5e6) ==
        doctest::Approx(5e6).epsilon(1e-12));
  CHECK(sum_rate({0}, g, 10.0, 1e-9, 5e6) == 0.0);
}

TEST_CASE("sum_rate matches the frozen two-link hand value") {
  ChannelRealization g;
  g.gain = Eigen::MatrixXd::Zero(2, 2);
  g.gain(0, 0) = 1e-9;
  g.gain(1, 1) = 1e-9;
  g.gain(0, 1) = 1e-10;
  g.gain(1, 0) = 1e-10;
  CHECK(sum_rate({1, 1}, g, 10.0, 1e-10, 5e6) ==
        doctest::Approx(33349842.477128085).epsilon(1e-12));
}

TEST_CASE("inactive links contribute no interference") {
  ChannelRealization g;
  g.gain = Eigen::MatrixXd::Zero(2, 2);
  g.gain(0, 0) = 1e-9;
  g.gain(1, 1) = 1e-9;
  g.gain(0, 1) = 1e-6;  // would crush link 0 if link 1 were active
  g.gain(1, 0) = 1e-6;
  const double solo = sum_rate({1, 0}, g, 10.0, 1e-10, 5e6);
  const double expected = 5e6 * std::log2(1.0 + 10.0 * 1e-9 / 1e-10);
  CHECK(solo == doctest::Approx(expected).epsilon(1e-12));
  CHECK(sum_rate({0, 0}, g, 10.0, 1e-10, 5e6) == 0.0);
}

TEST_CASE("sum_rate rejects dimension mismatch") {
  ChannelRealization g;
  g.gain = Eigen::MatrixXd::Identity(2, 2);
  CHECK_THROWS_AS(sum_rate({1}, g, 1.0, 1.0, 1.0), std::invalid_argument);
}

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace spdlink {

struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

double euclidean(const Point2D& a, const Point2D& b);

// One network layout: K transmitter/receiver pairs on a square area.
// Transmitters lie inside [0, area_side]^2; each receiver sits on a
// ring of radius in [r_min, r_max] around its transmitter and may fall
// outside the square. Immutable after construction.
struct Deployment {
  int k = 0;
  std::vector<Point2D> tx;
  std::vector<Point2D> rx;
  double area_side = 0.0;
  std::uint64_t seed = 0;
};

// Draws a layout. Per pair, in index order, exactly four uniform draws
// are consumed: tx_x, tx_y, radius, angle. Identical arguments yield a
// bit-identical Deployment.
Deployment gen_deployment(int k, double area_side, double r_min,
                          double r_max, std::uint64_t seed);

// Entry (i, j) is the distance from transmitter j to receiver i, so the
// diagonal holds the direct link lengths.
Eigen::MatrixXd distance_matrix(const Deployment& dep);

double direct_distance(const Deployment& dep, int i);

// Text format: header "k area_side seed", then one line per pair with
// "tx_x tx_y rx_x rx_y". Full double precision, so a write/read
// roundtrip is bit-exact.
void write_deployment(const Deployment& dep, std::ostream& out);
Deployment read_deployment(std::istream& in);
void save_deployment(const Deployment& dep, const std::string& path);
Deployment load_deployment(const std::string& path);

}  // namespace spdlink

// SPDX-License-Identifier: Apache-2.0
#include "spdlink/geometry.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "spdlink/rng.hpp"

namespace spdlink {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_pair_index(const Deployment& dep, int i) {
  if (i < 0 || i >= dep.k) {
    throw std::out_of_range("pair index out of range");
  }
}

}  // namespace

double euclidean(const Point2D& a, const Point2D& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

Deployment gen_deployment(int k, double area_side, double r_min,
                          double r_max, std::uint64_t seed) {
  if (k < 1) {
    throw std::invalid_argument("gen_deployment: k must be >= 1");
  }
  if (!(0.0 < r_min && r_min < r_max && r_max < area_side)) {
    throw std::invalid_argument(
        "gen_deployment: require 0 < r_min < r_max < area_side");
  }
  Deployment dep;
  dep.k = k;
  dep.area_side = area_side;
  dep.seed = seed;
  dep.tx.reserve(k);
  dep.rx.reserve(k);
  Rng rng(seed);
  for (int i = 0; i < k; ++i) {
    Point2D t{rng.uniform01() * area_side, rng.uniform01() * area_side};
    const double radius = r_min + rng.uniform01() * (r_max - r_min);
    const double angle = rng.uniform01() * kTwoPi;
    Point2D r{t.x + radius * std::cos(angle), t.y + radius * std::sin(angle)};
    dep.tx.push_back(t);
    dep.rx.push_back(r);
  }
  return dep;
}

Eigen::MatrixXd distance_matrix(const Deployment& dep) {
  Eigen::MatrixXd d(dep.k, dep.k);
  for (int i = 0; i < dep.k; ++i) {
    for (int j = 0; j < dep.k; ++j) {
      d(i, j) = euclidean(dep.tx[j], dep.rx[i]);
    }
  }
  return d;
}

double direct_distance(const Deployment& dep, int i) {
  check_pair_index(dep, i);
  return euclidean(dep.tx[i], dep.rx[i]);
}

void write_deployment(const Deployment& dep, std::ostream& out) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d %.17g %llu\n", dep.k, dep.area_side,
                static_cast<unsigned long long>(dep.seed));
  out << buf;
  for (int i = 0; i < dep.k; ++i) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g\n", dep.tx[i].x,
                  dep.tx[i].y, dep.rx[i].x, dep.rx[i].y);
    out << buf;
  }
}

Deployment read_deployment(std::istream& in) {
  Deployment dep;
  unsigned long long seed = 0;
  if (!(in >> dep.k >> dep.area_side >> seed)) {
    throw std::runtime_error("read_deployment: malformed header");
  }
  if (dep.k < 1) {
    throw std::runtime_error("read_deployment: k must be >= 1");
  }
  dep.seed = seed;
  dep.tx.resize(dep.k);
  dep.rx.resize(dep.k);
  for (int i = 0; i < dep.k; ++i) {
    if (!(in >> dep.tx[i].x >> dep.tx[i].y >> dep.rx[i].x >> dep.rx[i].y)) {
      throw std::runtime_error("read_deployment: truncated pair list");
    }
  }
  return dep;
}

void save_deployment(const Deployment& dep, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("save_deployment: cannot open " + path);
  }
  write_deployment(dep, out);
  if (!out) {
    throw std::runtime_error("save_deployment: write failed for " + path);
  }
}

Deployment load_deployment(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("load_deployment: cannot open " + path);
  }
  return read_deployment(in);
}

}  // namespace spdlink

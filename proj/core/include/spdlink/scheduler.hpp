// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spdlink/channel.hpp"
#include "spdlink/geometry.hpp"
#include "spdlink/graph.hpp"

#include <Eigen/Core>

namespace spdlink {

// Activation decision over K pairs. x[i] == 1 iff i appears in z;
// z lists scheduled pairs in the order they were accepted.
struct Schedule {
  std::vector<int> x;
  std::vector<int> z;
  std::string scheme;
};

Schedule schedule_from_z(const std::vector<int>& z, int k, std::string scheme);

double activation_ratio(const Schedule& s);

struct LemConfig {
  double gamma = 0.5;
  double r = 0.8;  // threshold ratio, applied on the metric scale
};

// Ascending direct-link length, ties by ascending pair index.
std::vector<int> sort_by_direct_distance(const Deployment& dep);

// Per-layout runner for the sequential selection walk. Caches the
// single-pair logarithms and memoizes pairwise distances, which are
// independent of the threshold ratio, so sweeping r over one layout
// prices the eigendecompositions only once.
class LemScheduler {
 public:
  LemScheduler(Deployment dep, double gamma);

  // Metric-scale discrepancy between the joint (k1, k2) matrix and the
  // single-pair matrix of k1: sqrt of the squared log-Frobenius form.
  double pair_distance(int k1, int k2);

  // Threshold for one walk: r times the largest distance from the
  // first-sorted pair to any other pair.
  double threshold(double r);

  Schedule run(double r);

  const std::vector<int>& order() const { return order_; }

 private:
  const Eigen::MatrixXd& single_log(int i);

  Deployment dep_;
  double gamma_;
  NodeIndexing idx_;
  std::vector<int> order_;
  std::vector<std::optional<Eigen::MatrixXd>> single_logs_;
  std::vector<double> dist_memo_;  // k1 * K + k2, NaN when unset
};

// Threshold for a layout whose walk starts at `first`. Needs at least
// two pairs; with one pair there is no other pair to measure against.
double compute_threshold(const Deployment& dep, int first,
                         const LemConfig& cfg);

// Sequential selection from positions alone. The first-sorted pair is
// always scheduled; each later candidate joins iff its smallest
// distance to every already-scheduled pair reaches the threshold.
Schedule schedule_lem(const Deployment& dep, const LemConfig& cfg);

// Tries links in descending direct-SNR order, keeping each link iff the
// total sum rate does not decrease.
Schedule schedule_greedy(const ChannelRealization& g,
                         const ChannelParams& params);

// Exactly one link: the largest direct SNR, ties to the lowest index.
// The common power and noise scaling cannot change the argmax, so the
// gain diagonal decides alone.
Schedule schedule_strongest(const ChannelRealization& g);

// Each link active independently with the given probability.
Schedule schedule_random(int k, double activation_prob, std::uint64_t seed);

Schedule schedule_all(int k);

// Enumerates all 2^K activation vectors and returns the sum-rate
// maximizer. Ties prefer fewer active links, then the lexicographically
// smallest sorted index list. Refuses K beyond the guard.
Schedule schedule_exhaustive(const ChannelRealization& g,
                             const ChannelParams& params, int k_max_guard);

}  // namespace spdlink

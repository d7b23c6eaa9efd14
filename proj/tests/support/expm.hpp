// SPDX-License-Identifier: Apache-2.0
#pragma once

// Matrix exponential via scaling-and-squaring with a Taylor series.
// Test-only inverse for the library's principal logarithm; deliberately
// avoids any eigendecomposition so the roundtrip check is independent.

#include <cmath>

#include <Eigen/Core>

namespace testsupport {

inline Eigen::MatrixXd expm_taylor(const Eigen::MatrixXd& a) {
  const double norm = a.norm();
  int s = 0;
  while (norm / std::pow(2.0, s) > 0.25) {
    ++s;
  }
  const Eigen::MatrixXd b = a / std::pow(2.0, s);
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= 24; ++k) {
    term = (term * b) / static_cast<double>(k);
    result += term;
  }
  for (int i = 0; i < s; ++i) {
    result = result * result;
  }
  return result;
}

}  // namespace testsupport

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

#include "spdlink/graph.hpp"

namespace spdlink {

// Full spectral decomposition of a symmetric matrix: eigenvalues in
// ascending order, eigenvectors as matching orthonormal columns.
struct SymEig {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
};

SymEig sym_eig(const Eigen::MatrixXd& s);

// Principal matrix logarithm Q diag(ln lambda) Q^T. Rejects inputs
// whose smallest eigenvalue is at or below 1e-10 times the largest.
// Output is explicitly symmetrized.
Eigen::MatrixXd logm(const SpdMatrix& s);

// Log-Euclidean discrepancy: the squared Frobenius norm of the matrix
// logarithm difference. The squared form is returned; callers needing
// the metric (which satisfies the triangle inequality) take the root.
double lem_distance(const SpdMatrix& s1, const SpdMatrix& s2);

// Same quantity from precomputed logarithms; used where logs are cached.
inline double log_frobenius_sq(const Eigen::MatrixXd& log1,
                               const Eigen::MatrixXd& log2) {
  return (log1 - log2).squaredNorm();
}

}  // namespace spdlink

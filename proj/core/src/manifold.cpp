// SPDX-License-Identifier: Apache-2.0
#include "spdlink/manifold.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace spdlink {
namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kPdRelTol = 1e-10;

}  // namespace

SymEig sym_eig(const Eigen::MatrixXd& s) {
  if (s.rows() != s.cols()) {
    throw std::invalid_argument("sym_eig: matrix must be square");
  }
  const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
  if ((s - s.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol * scale) {
    throw std::invalid_argument("sym_eig: matrix not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("sym_eig: eigendecomposition did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::MatrixXd logm(const SpdMatrix& s) {
  const SymEig eig = sym_eig(s.m());
  const double lambda_min = eig.eigenvalues(0);
  const double lambda_max = eig.eigenvalues(eig.eigenvalues.size() - 1);
  if (!(lambda_max > 0.0) || lambda_min <= kPdRelTol * lambda_max) {
    throw std::domain_error("logm: matrix not positive definite");
  }
  const Eigen::VectorXd log_ev = eig.eigenvalues.array().log();
  Eigen::MatrixXd out = eig.eigenvectors * log_ev.asDiagonal() *
                        eig.eigenvectors.transpose();
  return 0.5 * (out + out.transpose());
}

double lem_distance(const SpdMatrix& s1, const SpdMatrix& s2) {
  if (s1.n() != s2.n()) {
    throw std::invalid_argument("lem_distance: dimension mismatch");
  }
  return log_frobenius_sq(logm(s1), logm(s2));
}

}  // namespace spdlink

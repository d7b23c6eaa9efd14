// SPDX-License-Identifier: Apache-2.0
#include "spdlink/graph.hpp"

#include <stdexcept>

namespace spdlink {
namespace {

constexpr double kSymmetryTol = 1e-12;

void check_symmetric(const Eigen::MatrixXd& m, const char* who) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double skew = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (skew > kSymmetryTol * scale) {
    throw std::invalid_argument(std::string(who) + ": matrix not symmetric");
  }
}

}  // namespace

SpdMatrix::SpdMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
  check_symmetric(m_, "SpdMatrix");
}

EdgeList single_pair_edges(int i, const NodeIndexing& idx) {
  if (i < 0 || i >= idx.k) {
    throw std::out_of_range("single_pair_edges: pair index out of range");
  }
  return {{idx.tx_node(i), idx.rx_node(i), 1.0}};
}

EdgeList pair_pair_edges(int i, int j, const Deployment& dep) {
  if (i == j) {
    throw std::invalid_argument("pair_pair_edges: i and j must differ");
  }
  if (i < 0 || i >= dep.k || j < 0 || j >= dep.k) {
    throw std::out_of_range("pair_pair_edges: pair index out of range");
  }
  const NodeIndexing idx{dep.k};
  return {
      {idx.tx_node(i), idx.rx_node(i), 1.0},
      {idx.tx_node(j), idx.rx_node(j), 1.0},
      {idx.tx_node(i), idx.rx_node(j), euclidean(dep.tx[i], dep.rx[j])},
      {idx.tx_node(j), idx.rx_node(i), euclidean(dep.tx[j], dep.rx[i])},
  };
}

Eigen::MatrixXd incidence_matrix(const EdgeList& edges, int n) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, static_cast<int>(edges.size()));
  for (int l = 0; l < static_cast<int>(edges.size()); ++l) {
    const Edge& e = edges[l];
    if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n) {
      throw std::out_of_range("incidence_matrix: node index out of range");
    }
    if (e.from == e.to) {
      throw std::invalid_argument("incidence_matrix: self-loop edge");
    }
    a(e.from, l) = 1.0;
    a(e.to, l) = -1.0;
  }
  return a;
}

Eigen::MatrixXd weight_matrix(const EdgeList& edges) {
  const int m = static_cast<int>(edges.size());
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(m, m);
  for (int l = 0; l < m; ++l) {
    if (!(edges[l].weight > 0.0)) {
      throw std::invalid_argument("weight_matrix: weights must be positive");
    }
    w(l, l) = edges[l].weight;
  }
  return w;
}

Eigen::MatrixXd laplacian(const Eigen::MatrixXd& a, const Eigen::MatrixXd& w) {
  if (w.rows() != w.cols() || a.cols() != w.rows()) {
    throw std::invalid_argument("laplacian: dimension mismatch");
  }
  for (int r = 0; r < w.rows(); ++r) {
    for (int c = 0; c < w.cols(); ++c) {
      if (r == c) {
        if (!(w(r, c) > 0.0)) {
          throw std::invalid_argument("laplacian: weights must be positive");
        }
      } else if (w(r, c) != 0.0) {
        throw std::invalid_argument("laplacian: W must be diagonal");
      }
    }
  }
  Eigen::MatrixXd l = a * w * a.transpose();
  return 0.5 * (l + l.transpose());
}

SpdMatrix regularize(const Eigen::MatrixXd& l, double gamma) {
  if (!(gamma > 0.0)) {
    throw std::invalid_argument("regularize: gamma must be positive");
  }
  check_symmetric(l, "regularize");
  Eigen::MatrixXd s = l;
  s.diagonal().array() += gamma;
  return SpdMatrix(std::move(s));
}

SpdMatrix single_pair_spd(int i, const NodeIndexing& idx, double gamma) {
  const EdgeList edges = single_pair_edges(i, idx);
  return regularize(
      laplacian(incidence_matrix(edges, idx.n()), weight_matrix(edges)),
      gamma);
}

SpdMatrix pair_pair_spd(int i, int j, const Deployment& dep, double gamma) {
  const EdgeList edges = pair_pair_edges(i, j, dep);
  const NodeIndexing idx{dep.k};
  return regularize(
      laplacian(incidence_matrix(edges, idx.n()), weight_matrix(edges)),
      gamma);
}

}  // namespace spdlink

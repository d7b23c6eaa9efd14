// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include <Eigen/Core>

#include "spdlink/geometry.hpp"

namespace spdlink {

// Pair i owns transmitter node 2i and receiver node 2i+1; every graph
// over K pairs lives on the full n = 2K node set.
struct NodeIndexing {
  int k = 0;
  int n() const { return 2 * k; }
  int tx_node(int i) const { return 2 * i; }
  int rx_node(int i) const { return 2 * i + 1; }
};

struct Edge {
  int from = 0;
  int to = 0;
  double weight = 0.0;
};

using EdgeList = std::vector<Edge>;

// Symmetric positive definite matrix. Construction validates symmetry
// (relative infinity-norm tolerance 1e-12); positive definiteness is
// guaranteed by the regularized-Laplacian construction and re-checked
// where the spectrum is actually computed.
class SpdMatrix {
 public:
  explicit SpdMatrix(Eigen::MatrixXd m);

  const Eigen::MatrixXd& m() const { return m_; }
  int n() const { return static_cast<int>(m_.rows()); }

 private:
  Eigen::MatrixXd m_;
};

// The lone direct edge Tx_i -> Rx_i with weight exactly 1.
EdgeList single_pair_edges(int i, const NodeIndexing& idx);

// Exactly four edges in canonical order: direct_i, direct_j,
// Tx_i -> Rx_j, Tx_j -> Rx_i. Direct edges weigh 1; cross edges carry
// the Euclidean distance between their endpoints in meters.
EdgeList pair_pair_edges(int i, int j, const Deployment& dep);

// Column l holds +1 at edges[l].from and -1 at edges[l].to.
Eigen::MatrixXd incidence_matrix(const EdgeList& edges, int n);

// Diagonal weight matrix in edge order.
Eigen::MatrixXd weight_matrix(const EdgeList& edges);

// L = A W A^T, explicitly symmetrized so L == L^T holds bit-exactly.
// W must be diagonal with positive diagonal entries.
Eigen::MatrixXd laplacian(const Eigen::MatrixXd& a, const Eigen::MatrixXd& w);

// S = L + gamma I with gamma > 0; shifts the spectrum to [gamma, inf).
SpdMatrix regularize(const Eigen::MatrixXd& l, double gamma);

// Composition helpers producing the regularized matrices directly.
SpdMatrix single_pair_spd(int i, const NodeIndexing& idx, double gamma);
SpdMatrix pair_pair_spd(int i, int j, const Deployment& dep, double gamma);

}  // namespace spdlink

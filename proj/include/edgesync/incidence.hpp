#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "edgesync/graph.hpp"

namespace edgesync {

// Incidence and Laplacian matrices of a signed digraph, built in exact
// integer arithmetic and mirrored as doubles for spectral work.
//
// Column k of Es (N x M) carries edge k = (tail j -> head i, sign s):
// +1 at row j; -1 at row i when s = +1, +1 at row i when s = -1.
// Column k of EsIn has a single entry at the head row: -1 when s = +1,
// +1 when s = -1 (rows of nodes without in-edges stay zero).
// Ls = EsIn * Es^T (N x N), Le = Es^T * EsIn (M x M).
struct IncidenceSet {
  Eigen::MatrixXi Es_int, EsIn_int, Ls_int, Le_int;
  Eigen::MatrixXd Es, EsIn, Ls, Le;
};

Eigen::MatrixXi build_incidence(const SignedDigraph& g);
Eigen::MatrixXi build_in_incidence(const SignedDigraph& g);
std::pair<Eigen::MatrixXi, Eigen::MatrixXi> build_laplacians(
    const Eigen::MatrixXi& Es, const Eigen::MatrixXi& EsIn);

IncidenceSet build_incidence_set(const SignedDigraph& g);

// Node and edge polarities for a balanced graph: with D = diag(d),
// De = diag(de), D*Ls*D has nonpositive off-diagonal entries and D*Es*De has
// exactly one +1 and one -1 per column. de_k is the tail node's polarity.
struct GaugePair {
  std::vector<int> d;   // length N
  std::vector<int> de;  // length M
};

// Throws std::invalid_argument when the graph is structurally unbalanced.
GaugePair gauge_transform(const SignedDigraph& g);

}  // namespace edgesync

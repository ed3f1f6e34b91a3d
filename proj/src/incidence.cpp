#include "edgesync/incidence.hpp"

#include <stdexcept>

namespace edgesync {

Eigen::MatrixXi build_incidence(const SignedDigraph& g) {
  require_valid(g);
  Eigen::MatrixXi Es = Eigen::MatrixXi::Zero(g.n, g.edge_count());
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges[k];
    Es(e.tail - 1, k) = 1;
    Es(e.head - 1, k) = e.sign == 1 ? -1 : 1;
  }
  return Es;
}

Eigen::MatrixXi build_in_incidence(const SignedDigraph& g) {
  require_valid(g);
  Eigen::MatrixXi EsIn = Eigen::MatrixXi::Zero(g.n, g.edge_count());
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges[k];
    EsIn(e.head - 1, k) = e.sign == 1 ? -1 : 1;
  }
  return EsIn;
}

std::pair<Eigen::MatrixXi, Eigen::MatrixXi> build_laplacians(
    const Eigen::MatrixXi& Es, const Eigen::MatrixXi& EsIn) {
  if (Es.rows() != EsIn.rows() || Es.cols() != EsIn.cols())
    throw std::invalid_argument("incidence matrices must share their shape");
  return {EsIn * Es.transpose(), Es.transpose() * EsIn};
}

IncidenceSet build_incidence_set(const SignedDigraph& g) {
  IncidenceSet inc;
  inc.Es_int = build_incidence(g);
  inc.EsIn_int = build_in_incidence(g);
  std::tie(inc.Ls_int, inc.Le_int) = build_laplacians(inc.Es_int, inc.EsIn_int);
  inc.Es = inc.Es_int.cast<double>();
  inc.EsIn = inc.EsIn_int.cast<double>();
  inc.Ls = inc.Ls_int.cast<double>();
  inc.Le = inc.Le_int.cast<double>();
  return inc;
}

GaugePair gauge_transform(const SignedDigraph& g) {
  BalanceResult b = is_structurally_balanced(g);
  if (!b.balanced)
    throw std::invalid_argument(
        "gauge transform requires a structurally balanced graph");
  GaugePair gp;
  gp.d = b.gauge->d;
  gp.de.reserve(g.edges.size());
  for (const Edge& e : g.edges) gp.de.push_back(gp.d[e.tail - 1]);
  return gp;
}

}  // namespace edgesync

#include <stdexcept>

#include "doctest.h"
#include "edgesync/incidence.hpp"
#include "edgesync/random_graph.hpp"
#include "fixtures.hpp"

using namespace edgesync;

TEST_CASE("single cooperative edge") {
  SignedDigraph g{2, {{1, 2, 1}}};
  IncidenceSet inc = build_incidence_set(g);
  CHECK(inc.Es_int(0, 0) == 1);
  CHECK(inc.Es_int(1, 0) == -1);
  CHECK(inc.EsIn_int(0, 0) == 0);
  CHECK(inc.EsIn_int(1, 0) == -1);
  Eigen::MatrixXi ls(2, 2);
  ls << 0, 0, -1, 1;
  CHECK(inc.Ls_int == ls);
  CHECK(inc.Le_int(0, 0) == 1);
}

TEST_CASE("single competitive edge") {
  SignedDigraph g{2, {{1, 2, -1}}};
  IncidenceSet inc = build_incidence_set(g);
  CHECK(inc.Es_int(0, 0) == 1);
  CHECK(inc.Es_int(1, 0) == 1);
  CHECK(inc.EsIn_int(1, 0) == 1);
  Eigen::MatrixXi ls(2, 2);
  ls << 0, 0, 1, 1;
  CHECK(inc.Ls_int == ls);
  CHECK(inc.Le_int(0, 0) == 1);
}

TEST_CASE("five-node tree columns and the root's zero row") {
  SignedDigraph g = fixtures::root_tree5();
  IncidenceSet inc = build_incidence_set(g);
  REQUIRE(inc.Es.rows() == 5);
  REQUIRE(inc.Es.cols() == 5);
  // edge 1 = (1,2,-1): +1 at tail 1, +1 at head 2 (competitive)
  Eigen::VectorXi col1(5), col5(5);
  col1 << 1, 1, 0, 0, 0;
  CHECK(inc.Es_int.col(0) == col1);
  // edge 5 = (5,1,+1): +1 at tail 5, -1 at head 1 (cooperative)
  col5 << -1, 0, 0, 0, 1;
  CHECK(inc.Es_int.col(4) == col5);
  // the root has no in-edges, so its in-incidence row vanishes
  CHECK(inc.EsIn_int.row(4).cwiseAbs().sum() == 0);
  // trace of Ls counts every in-edge once
  CHECK(inc.Ls_int.trace() == g.edge_count());
}

TEST_CASE("incidence column structure holds on random graphs") {
  RandomGraphParams p;
  p.roots = 1;
  p.sb_sccs = 1;
  p.sub_sccs = 1;
  p.n = 14;
  p.density = 0.3;
  SignedDigraph g = random_leader_graph(p, 17);
  IncidenceSet inc = build_incidence_set(g);
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges[k];
    CHECK(inc.Es_int.col(k).cwiseAbs().sum() == 2);
    CHECK(inc.Es_int(e.tail - 1, k) == 1);
    CHECK(inc.Es_int(e.head - 1, k) == -e.sign);
    CHECK(inc.EsIn_int.col(k).cwiseAbs().sum() == 1);
    CHECK(inc.EsIn_int(e.head - 1, k) == -e.sign);
  }
  // Ls diagonal = in-degree, off-diagonal = -a_ij
  for (int i = 1; i <= g.n; ++i) {
    int indeg = 0;
    for (const Edge& e : g.edges) indeg += e.head == i;
    CHECK(inc.Ls_int(i - 1, i - 1) == indeg);
  }
  for (const Edge& e : g.edges)
    CHECK(inc.Ls_int(e.head - 1, e.tail - 1) == -e.sign);
  // products are exact
  CHECK(inc.Ls_int == (inc.EsIn_int * inc.Es_int.transpose()).eval());
  CHECK(inc.Le_int == (inc.Es_int.transpose() * inc.EsIn_int).eval());
  CHECK(inc.Ls == inc.Ls_int.cast<double>());
  CHECK(inc.Le == inc.Le_int.cast<double>());
}

TEST_CASE("gauge transform turns balanced matrices into unsigned form") {
  SignedDigraph g = fixtures::two_roots9();
  IncidenceSet inc = build_incidence_set(g);
  GaugePair gp = gauge_transform(g);
  REQUIRE(static_cast<int>(gp.d.size()) == g.n);
  REQUIRE(static_cast<int>(gp.de.size()) == g.edge_count());
  // edge gauge is the node gauge at the tail
  for (int k = 0; k < g.edge_count(); ++k)
    CHECK(gp.de[k] == gp.d[g.edges[k].tail - 1]);

  Eigen::VectorXd d(g.n), de(g.edge_count());
  for (int i = 0; i < g.n; ++i) d[i] = gp.d[i];
  for (int k = 0; k < g.edge_count(); ++k) de[k] = gp.de[k];
  Eigen::MatrixXd DLsD = d.asDiagonal() * inc.Ls * d.asDiagonal();
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (i != j) CHECK(DLsD(i, j) <= 0.0);
  Eigen::MatrixXd DEsDe = d.asDiagonal() * inc.Es * de.asDiagonal();
  for (int k = 0; k < g.edge_count(); ++k) {
    CHECK(DEsDe.col(k).maxCoeff() == 1.0);
    CHECK(DEsDe.col(k).minCoeff() == -1.0);
    CHECK(DEsDe.col(k).cwiseAbs().sum() == 2.0);
  }
}

TEST_CASE("gauge transform refuses unbalanced graphs") {
  CHECK_THROWS_AS(gauge_transform(fixtures::unbalanced_cycle3()),
                  std::invalid_argument);
  CHECK_THROWS_AS(gauge_transform(fixtures::root_tree5()),
                  std::invalid_argument);
}

#include <stdexcept>

#include "doctest.h"
#include "edgesync/behavior.hpp"
#include "edgesync/pipeline.hpp"
#include "edgesync/random_graph.hpp"
#include "fixtures.hpp"

using namespace edgesync;

namespace {

const TolerancePolicy kTol;

std::pair<BehaviorClass, int> classify_graph(const SignedDigraph& g) {
  LeaderStructure ls = leader_groups(g);
  return classify(g, ls, is_structurally_balanced(g).balanced,
                  has_directed_spanning_tree(g));
}

BehaviorVerdict run_and_verify(const SignedDigraph& g,
                               const Eigen::VectorXd& x0) {
  LeaderStructure ls = leader_groups(g);
  BalanceResult b = is_structurally_balanced(g);
  IncidenceSet inc = build_incidence_set(g);
  ZeroEigenstructure zes = zero_eigenstructure(inc.Le, inc.Es, kTol);
  SimulationConfig cfg;
  cfg.x0 = x0;
  Trajectory traj = simulate(g, inc, zes, cfg);
  return verify_behavior(g, ls, b.balanced, b.gauge,
                         has_directed_spanning_tree(g), traj, kTol.sim_tol);
}

bool has_check(const BehaviorVerdict& v, const std::string& name) {
  for (const BehaviorCheck& c : v.checks)
    if (c.name == name) return true;
  return false;
}

}  // namespace

TEST_CASE("classification covers all five structural situations") {
  auto [c1, i1] = classify_graph(fixtures::balanced_cycle3());
  CHECK(c1 == BehaviorClass::BipartiteConsensus);
  CHECK(i1 == 1);

  auto [c2, i2] = classify_graph(fixtures::unbalanced_cycle3());
  CHECK(c2 == BehaviorClass::TrivialConsensus);
  CHECK(i2 == 2);

  auto [c3a, i3a] = classify_graph(fixtures::root_tree5());
  CHECK(c3a == BehaviorClass::IntervalBipartiteConsensus);
  CHECK(i3a == 3);
  // source can also be a balanced cycle with the imbalance downstream
  auto [c3b, i3b] = classify_graph(fixtures::sb_cycle_sub_follower());
  CHECK(c3b == BehaviorClass::IntervalBipartiteConsensus);
  CHECK(i3b == 3);

  for (const SignedDigraph& g :
       {fixtures::two_roots9(), fixtures::root_sb_cycle9(),
        fixtures::root_sub_cycle9(), fixtures::mixed_groups9()}) {
    auto [c4, i4] = classify_graph(g);
    CHECK(c4 == BehaviorClass::BipartiteContainment);
    CHECK(i4 == 4);
  }

  // multiple leader groups, every one an unbalanced cycle
  RandomGraphParams p;
  p.roots = 0;
  p.sub_sccs = 2;
  p.n = 9;
  SignedDigraph all_sub = random_leader_graph(p, 5);
  auto [c5, i5] = classify_graph(all_sub);
  CHECK(c5 == BehaviorClass::TrivialConsensus);
  CHECK(i5 == 5);
}

TEST_CASE("class names serialize") {
  CHECK(std::string(to_string(BehaviorClass::BipartiteConsensus)) ==
        "BipartiteConsensus");
  CHECK(std::string(to_string(BehaviorClass::TrivialConsensus)) ==
        "TrivialConsensus");
  CHECK(std::string(to_string(BehaviorClass::IntervalBipartiteConsensus)) ==
        "IntervalBipartiteConsensus");
  CHECK(std::string(to_string(BehaviorClass::BipartiteContainment)) ==
        "BipartiteContainment");
}

TEST_CASE("balanced cycle settles at the gauged mean") {
  SignedDigraph g = fixtures::balanced_cycle3();
  Eigen::VectorXd x0(3);
  x0 << 2.0, -1.0, 3.0;
  BehaviorVerdict v = run_and_verify(g, x0);
  CHECK(v.predicted == BehaviorClass::BipartiteConsensus);
  CHECK(v.case_index == 1);
  CHECK(v.overall_pass);
  CHECK(has_check(v, "edge_states_vanish"));
  CHECK(has_check(v, "gauge_consensus"));
  CHECK(has_check(v, "sync_errors_vanish"));

  // the consensus value is the mean of the gauged states: d = (+,+,-),
  // c = (2 - 1 - 3)/3 = -2/3, so x -> (-2/3, -2/3, +2/3)
  LeaderStructure ls = leader_groups(g);
  IncidenceSet inc = build_incidence_set(g);
  ZeroEigenstructure zes = zero_eigenstructure(inc.Le, inc.Es, kTol);
  SimulationConfig cfg;
  cfg.x0 = x0;
  Trajectory traj = simulate(g, inc, zes, cfg);
  Eigen::VectorXd expected(3);
  expected << -2.0 / 3.0, -2.0 / 3.0, 2.0 / 3.0;
  CHECK(max_abs(traj.X.bottomRows(1).transpose() - expected) < 1e-6);
}

TEST_CASE("unbalanced cycle kills every state") {
  Eigen::VectorXd x0(3);
  x0 << 4.0, -2.0, 1.0;
  BehaviorVerdict v = run_and_verify(fixtures::unbalanced_cycle3(), x0);
  CHECK(v.case_index == 2);
  CHECK(v.overall_pass);
  CHECK(has_check(v, "states_vanish"));
}

TEST_CASE("single-root tree stays inside the leader interval") {
  BehaviorVerdict v = run_and_verify(fixtures::root_tree5(), fixtures::x0_5());
  CHECK(v.case_index == 3);
  CHECK(v.overall_pass);
  CHECK(has_check(v, "interval_bound"));
}

TEST_CASE("balanced containment puts followers between gauged leaders") {
  for (const SignedDigraph& g :
       {fixtures::two_roots9(), fixtures::root_sb_cycle9()}) {
    BehaviorVerdict v = run_and_verify(g, fixtures::x0_9());
    CHECK(v.case_index == 4);
    CHECK(v.overall_pass);
    CHECK(has_check(v, "containment_interval"));
  }
}

TEST_CASE("unbalanced containment bounds follower magnitudes") {
  for (const SignedDigraph& g :
       {fixtures::root_sub_cycle9(), fixtures::mixed_groups9()}) {
    BehaviorVerdict v = run_and_verify(g, fixtures::x0_9());
    CHECK(v.case_index == 4);
    CHECK(v.overall_pass);
    CHECK(has_check(v, "containment_magnitude"));
  }
}

TEST_CASE("all-unbalanced leader groups collapse to zero") {
  RandomGraphParams p;
  p.roots = 0;
  p.sub_sccs = 2;
  p.n = 10;
  SignedDigraph g = random_leader_graph(p, 21);
  BehaviorVerdict v = run_and_verify(g, default_x0(10));
  CHECK(v.case_index == 5);
  CHECK(v.predicted == BehaviorClass::TrivialConsensus);
  CHECK(v.overall_pass);
}

TEST_CASE("containment violations are caught, not smoothed over") {
  SignedDigraph g = fixtures::two_roots9();
  LeaderStructure ls = leader_groups(g);
  GaugeVector gauge = *is_structurally_balanced(g).gauge;
  // hand-built final state: follower 8 pushed far outside the leader span
  Trajectory fake;
  fake.times = {0.0};
  fake.X = Eigen::MatrixXd::Zero(1, 9);
  fake.X(0, 6) = 3.5;   // leader 7
  fake.X(0, 8) = 5.5;   // leader 9
  fake.X(0, 7) = 40.0;  // follower 8, out of range
  std::vector<BehaviorCheck> checks =
      verify_containment_sb(fake, ls, gauge, kTol.sim_tol);
  bool found_failure = false;
  for (const BehaviorCheck& c : checks) found_failure |= !c.pass;
  CHECK(found_failure);
}

TEST_CASE("interval violations are caught") {
  SignedDigraph g = fixtures::root_tree5();
  LeaderStructure ls = leader_groups(g);
  Trajectory fake;
  fake.times = {0.0};
  fake.X = Eigen::MatrixXd::Zero(1, 5);
  fake.X(0, 4) = 1.0;   // leader magnitude
  fake.X(0, 2) = -2.0;  // follower outside [-1, 1]
  std::vector<BehaviorCheck> checks =
      verify_interval_bipartite(fake, ls, kTol.sim_tol);
  bool found_failure = false;
  for (const BehaviorCheck& c : checks) found_failure |= !c.pass;
  CHECK(found_failure);
}

TEST_CASE("a balanced class without a gauge is a usage error") {
  SignedDigraph g = fixtures::balanced_cycle3();
  LeaderStructure ls = leader_groups(g);
  IncidenceSet inc = build_incidence_set(g);
  ZeroEigenstructure zes = zero_eigenstructure(inc.Le, inc.Es, kTol);
  SimulationConfig cfg;
  cfg.x0 = Eigen::Vector3d(1.0, 2.0, 3.0);
  Trajectory traj = simulate(g, inc, zes, cfg);
  CHECK_THROWS_AS(
      verify_behavior(g, ls, true, std::nullopt, true, traj, kTol.sim_tol),
      std::invalid_argument);
}

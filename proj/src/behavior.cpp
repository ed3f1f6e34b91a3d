#include "edgesync/behavior.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace edgesync {

namespace {

BehaviorCheck make_check(std::string name, double residual, double tol) {
  BehaviorCheck c;
  c.name = std::move(name);
  c.residual = residual;
  c.tol = tol;
  c.pass = residual <= tol;
  return c;
}

Eigen::VectorXd final_state(const Trajectory& traj) {
  if (traj.X.rows() == 0)
    throw std::invalid_argument("trajectory has no recorded states");
  return traj.X.bottomRows(1).transpose();
}

}  // namespace

const char* to_string(BehaviorClass c) {
  switch (c) {
    case BehaviorClass::BipartiteConsensus: return "BipartiteConsensus";
    case BehaviorClass::TrivialConsensus: return "TrivialConsensus";
    case BehaviorClass::IntervalBipartiteConsensus:
      return "IntervalBipartiteConsensus";
    case BehaviorClass::BipartiteContainment: return "BipartiteContainment";
  }
  return "?";
}

std::pair<BehaviorClass, int> classify(const SignedDigraph& g,
                                       const LeaderStructure& ls, bool sb,
                                       bool spanning_tree) {
  require_assumptions(g, ls, spanning_tree);
  if (spanning_tree) {
    if (sb) return {BehaviorClass::BipartiteConsensus, 1};
    if (ls.groups.at(0).kind == GroupKind::SccSUB)
      return {BehaviorClass::TrivialConsensus, 2};
    return {BehaviorClass::IntervalBipartiteConsensus, 3};
  }
  if (ls.l1 + ls.l2sb >= 1) return {BehaviorClass::BipartiteContainment, 4};
  return {BehaviorClass::TrivialConsensus, 5};
}

std::vector<BehaviorCheck> verify_bipartite_consensus(const Trajectory& traj,
                                                      const GaugeVector& gauge,
                                                      double tol) {
  Eigen::VectorXd x = final_state(traj);
  double edge_residual =
      traj.E.rows() && traj.E.cols() ? traj.E.bottomRows(1).cwiseAbs().maxCoeff()
                                     : 0.0;
  double c = 0.0;
  for (int i = 0; i < x.size(); ++i) c += gauge.d[i] * x(i);
  c /= static_cast<double>(x.size());
  double gauge_residual = 0.0;
  for (int i = 0; i < x.size(); ++i)
    gauge_residual = std::max(gauge_residual, std::abs(x(i) - c * gauge.d[i]));
  return {make_check("edge_states_vanish", edge_residual, tol),
          make_check("gauge_consensus", gauge_residual, tol)};
}

std::vector<BehaviorCheck> verify_trivial_consensus(const Trajectory& traj,
                                                    double tol) {
  Eigen::VectorXd x = final_state(traj);
  return {make_check("states_vanish", x.cwiseAbs().maxCoeff(), tol)};
}

std::vector<BehaviorCheck> verify_interval_bipartite(const Trajectory& traj,
                                                     const LeaderStructure& ls,
                                                     double tol) {
  Eigen::VectorXd x = final_state(traj);
  double theta = 0.0;
  for (int v : ls.leaders) theta = std::max(theta, std::abs(x(v - 1)));
  double residual = std::max(0.0, x.cwiseAbs().maxCoeff() - theta);
  return {make_check("interval_bound", residual, tol)};
}

std::vector<BehaviorCheck> verify_containment_sb(const Trajectory& traj,
                                                 const LeaderStructure& ls,
                                                 const GaugeVector& gauge,
                                                 double tol) {
  Eigen::VectorXd x = final_state(traj);
  double residual = 0.0;
  for (int j : ls.followers) {
    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (int i : ls.leaders) {
      double aligned = gauge.d[i - 1] * gauge.d[j - 1] * x(i - 1);
      hi = std::max(hi, aligned);
      lo = std::min(lo, aligned);
    }
    double product = (x(j - 1) - hi) * (x(j - 1) - lo);
    residual = std::max(residual, std::max(0.0, product));
  }
  return {make_check("containment_interval", residual, tol)};
}

std::vector<BehaviorCheck> verify_containment_sub(const Trajectory& traj,
                                                  const LeaderStructure& ls,
                                                  double tol) {
  Eigen::VectorXd x = final_state(traj);
  double leader_mag = 0.0;
  for (int i : ls.leaders) leader_mag = std::max(leader_mag, std::abs(x(i - 1)));
  double residual = 0.0;
  for (int j : ls.followers)
    residual = std::max(residual, std::abs(x(j - 1)) - leader_mag);
  return {make_check("containment_magnitude", std::max(0.0, residual), tol)};
}

std::vector<BehaviorCheck> verify_sync_errors(const Trajectory& traj,
                                              double tol) {
  double residual = traj.Ebar.rows() && traj.Ebar.cols()
                        ? traj.Ebar.bottomRows(1).cwiseAbs().maxCoeff()
                        : 0.0;
  return {make_check("sync_errors_vanish", residual, tol)};
}

BehaviorVerdict verify_behavior(const SignedDigraph& g,
                                const LeaderStructure& ls, bool sb,
                                const std::optional<GaugeVector>& gauge,
                                bool spanning_tree, const Trajectory& traj,
                                double tol) {
  BehaviorVerdict verdict;
  auto [cls, item] = classify(g, ls, sb, spanning_tree);
  verdict.predicted = cls;
  verdict.case_index = item;

  auto need_gauge = [&]() -> const GaugeVector& {
    if (!gauge)
      throw std::invalid_argument(
          "the selected objective requires a balanced graph with its gauge");
    return *gauge;
  };

  switch (cls) {
    case BehaviorClass::BipartiteConsensus:
      verdict.checks = verify_bipartite_consensus(traj, need_gauge(), tol);
      break;
    case BehaviorClass::TrivialConsensus:
      verdict.checks = verify_trivial_consensus(traj, tol);
      break;
    case BehaviorClass::IntervalBipartiteConsensus:
      verdict.checks = verify_interval_bipartite(traj, ls, tol);
      break;
    case BehaviorClass::BipartiteContainment:
      verdict.checks = sb ? verify_containment_sb(traj, ls, need_gauge(), tol)
                          : verify_containment_sub(traj, ls, tol);
      break;
  }
  for (auto& c : verify_sync_errors(traj, tol)) verdict.checks.push_back(c);
  verdict.overall_pass =
      std::all_of(verdict.checks.begin(), verdict.checks.end(),
                  [](const BehaviorCheck& c) { return c.pass; });
  return verdict;
}

}  // namespace edgesync

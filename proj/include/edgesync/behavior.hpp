#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgesync/dynamics.hpp"
#include "edgesync/graph.hpp"

namespace edgesync {

enum class BehaviorClass {
  BipartiteConsensus,
  TrivialConsensus,
  IntervalBipartiteConsensus,
  BipartiteContainment,
};

const char* to_string(BehaviorClass c);

struct BehaviorCheck {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct BehaviorVerdict {
  BehaviorClass predicted = BehaviorClass::TrivialConsensus;
  int case_index = 0;  // structural case 1..5, see classify()
  std::vector<BehaviorCheck> checks;
  bool overall_pass = false;
};

// Emergent behavior from structure alone. Cases:
//   1 spanning tree, balanced                      -> BipartiteConsensus
//   2 spanning tree, source is an unbalanced SCC   -> TrivialConsensus
//   3 spanning tree, source is a root or SB SCC    -> IntervalBipartiteConsensus
//   4 multiple groups, some root or balanced SCC   -> BipartiteContainment
//   5 multiple groups, all unbalanced SCCs         -> TrivialConsensus
// Requires the structural assumptions (see require_assumptions).
std::pair<BehaviorClass, int> classify(const SignedDigraph& g,
                                       const LeaderStructure& ls, bool sb,
                                       bool spanning_tree);

// Each verifier evaluates its objective at the final recorded time and
// returns named residual checks against `tol`.

// Balanced spanning tree: all edge states vanish, and the state agrees with
// c*d where d is the gauge and c the mean of d_i * x_i.
std::vector<BehaviorCheck> verify_bipartite_consensus(const Trajectory& traj,
                                                      const GaugeVector& gauge,
                                                      double tol);

// All states vanish.
std::vector<BehaviorCheck> verify_trivial_consensus(const Trajectory& traj,
                                                    double tol);

// Every state magnitude stays within the largest final leader magnitude.
std::vector<BehaviorCheck> verify_interval_bipartite(const Trajectory& traj,
                                                     const LeaderStructure& ls,
                                                     double tol);

// Balanced multi-leader graph: every follower lies between the extremes of
// the sign-aligned leader states (s_i = d_i * d_j from the gauge).
std::vector<BehaviorCheck> verify_containment_sb(const Trajectory& traj,
                                                 const LeaderStructure& ls,
                                                 const GaugeVector& gauge,
                                                 double tol);

// Unbalanced multi-leader graph: follower magnitudes stay within the largest
// leader magnitude.
std::vector<BehaviorCheck> verify_containment_sub(const Trajectory& traj,
                                                  const LeaderStructure& ls,
                                                  double tol);

// Synchronization errors vanish; applies to every class.
std::vector<BehaviorCheck> verify_sync_errors(const Trajectory& traj,
                                              double tol);

// classify() + the matching objective verifier + the synchronization check.
BehaviorVerdict verify_behavior(const SignedDigraph& g,
                                const LeaderStructure& ls, bool sb,
                                const std::optional<GaugeVector>& gauge,
                                bool spanning_tree, const Trajectory& traj,
                                double tol);

}  // namespace edgesync

#pragma once

#include <cstdint>

#include "edgesync/graph.hpp"

namespace edgesync {

struct RandomGraphParams {
  int n = 9;
  int roots = 1;        // requested singleton leader groups
  int sb_sccs = 0;      // requested balanced leader components
  int sub_sccs = 0;     // requested unbalanced leader components
  int scc_size = 3;     // members per leader component (unbalanced ones need >= 3)
  double density = 0.15;   // inclusion probability per candidate extra edge
  double neg_prob = 0.3;   // negative sign probability for free edges
  bool force_sb = false;   // make the whole graph balanced (needs sub_sccs == 0)
};

// Seeded fixture generator. Layout: roots first, then balanced components,
// then unbalanced components (directed cycles), then followers. The first
// follower receives one in-edge from every leader group, which keeps the
// graph weakly connected; each later follower receives one in-edge from a
// uniformly chosen earlier node. Extra edges are only pointed at followers so
// the requested source components survive. The result is validated and its
// leader structure re-derived as a self-check.
//
// Throws std::invalid_argument on infeasible parameters (sizes exceeding n,
// no leader group at all, multiple groups without room for a follower,
// force_sb combined with unbalanced components).
SignedDigraph random_leader_graph(const RandomGraphParams& params,
                                  std::uint64_t seed);

}  // namespace edgesync

#pragma once

#include <Eigen/Dense>

#include "edgesync/graph.hpp"

// Hand-checked fixture graphs. Edge order matters: it fixes the matrix
// columns every frozen expectation refers to.
namespace fixtures {

using edgesync::SignedDigraph;

// 5 nodes, single root (node 5), unbalanced. Spanning tree whose source is a
// root node: interval bipartite consensus, (gamma, xi) = (1, 1).
inline SignedDigraph root_tree5() {
  return {5, {{1, 2, -1}, {1, 3, 1}, {2, 4, 1}, {3, 4, 1}, {5, 1, 1}}};
}

// 9 nodes, three leader groups: balanced 4-cycle {1,2,3,4}, unbalanced
// 3-cycle {5,6,7}, root {8}; follower {9}. (gamma, xi) = (2, 3).
inline SignedDigraph mixed_groups9() {
  return {9,
          {{1, 2, -1},
           {3, 1, 1},
           {2, 4, 1},
           {4, 3, -1},
           {5, 6, 1},
           {6, 7, 1},
           {7, 5, -1},
           {2, 9, -1},
           {5, 9, 1},
           {8, 9, -1}}};
}

// 9 nodes, two roots {7} and {9}, balanced. (gamma, xi) = (3, 3).
inline SignedDigraph two_roots9() {
  return {9,
          {{1, 2, -1},
           {1, 3, 1},
           {2, 4, 1},
           {3, 4, -1},
           {1, 5, 1},
           {3, 6, -1},
           {7, 1, -1},
           {7, 8, 1},
           {8, 1, -1},
           {9, 3, 1}}};
}

// Same skeleton with {1,7,8} turned into a balanced directed cycle: one root
// {9} plus one balanced-cycle group, graph balanced. (gamma, xi) = (2, 3).
inline SignedDigraph root_sb_cycle9() {
  SignedDigraph g = two_roots9();
  g.edges[6] = {1, 7, 1};
  g.edges[8] = {8, 1, 1};
  return g;
}

// Same skeleton with {1,7,8} an unbalanced cycle: one root {9} plus one
// unbalanced-cycle group. (gamma, xi) = (2, 2).
inline SignedDigraph root_sub_cycle9() {
  SignedDigraph g = two_roots9();
  g.edges[6] = {1, 7, -1};
  g.edges[8] = {8, 1, 1};
  return g;
}

// Balanced 3-cycle (one negative edge pair keeps the sign product positive):
// strongly connected, spanning tree, bipartite consensus.
inline SignedDigraph balanced_cycle3() {
  return {3, {{1, 2, 1}, {2, 3, -1}, {3, 1, -1}}};
}

// Unbalanced 3-cycle (sign product negative): trivial consensus, M = N so
// the edge Laplacian is invertible, (gamma, xi) = (0, 0).
inline SignedDigraph unbalanced_cycle3() {
  return {3, {{1, 2, 1}, {2, 3, 1}, {3, 1, -1}}};
}

// Balanced 3-cycle driving follower 4 through edges of clashing signs: the
// graph is unbalanced overall while its only source group is balanced, which
// is the defective case (gamma, xi) = (1, 2) on a spanning tree.
inline SignedDigraph sb_cycle_sub_follower() {
  return {4, {{1, 2, 1}, {2, 3, -1}, {3, 1, -1}, {1, 4, 1}, {2, 4, -1}}};
}

inline Eigen::VectorXd x0_5() {
  Eigen::VectorXd x0(5);
  x0 << 3.5, 4.0, -2.0, -6.5, 5.5;
  return x0;
}

inline Eigen::VectorXd x0_9() {
  Eigen::VectorXd x0(9);
  x0 << 3.5, 4.0, -2.0, -6.5, 5.5, -10.5, 3.5, 12.0, 5.5;
  return x0;
}

}  // namespace fixtures

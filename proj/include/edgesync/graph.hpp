#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace edgesync {

// Directed signed edge: tail -> head with weight sign in {+1, -1}.
// Node indices are 1-based throughout the public interface.
struct Edge {
  int tail = 0;
  int head = 0;
  int sign = 0;
};

inline bool operator==(const Edge& a, const Edge& b) {
  return a.tail == b.tail && a.head == b.head && a.sign == b.sign;
}

// Signed digraph. The position of an edge in `edges` is significant: edge k
// (0-based here, 1-based in file formats and reports) defines column k of
// every incidence matrix and the k-th edge-state coordinate.
struct SignedDigraph {
  int n = 0;
  std::vector<Edge> edges;

  int node_count() const { return n; }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

inline bool operator==(const SignedDigraph& a, const SignedDigraph& b) {
  return a.n == b.n && a.edges == b.edges;
}

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks: positive node count, indices in range, signs in {+1,-1}, no
// self-loops, no duplicate directed edges, digon sign-symmetry (if both
// (i,j) and (j,i) exist their signs agree). Violations are data, not errors.
ValidationReport validate(const SignedDigraph& g);

// Throws std::invalid_argument listing all violations if the graph is invalid.
void require_valid(const SignedDigraph& g);

struct SccResult {
  // Each component is sorted ascending; components are ordered by their
  // smallest member, so the result is independent of traversal order.
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;  // node i -> index into components, at [i-1]
  std::vector<std::pair<int, int>> condensation_edges;  // deduplicated, sorted
};

SccResult strongly_connected_components(const SignedDigraph& g);

enum class GroupKind { Root, SccSB, SccSUB };

struct LeaderGroup {
  GroupKind kind = GroupKind::Root;
  std::vector<int> members;  // sorted ascending
};

// Source components of the condensation, split by kind: a Root is a singleton
// with no incoming edges; a multi-node source component is SccSB or SccSUB
// depending on the structural balance of its induced subgraph.
struct LeaderStructure {
  std::vector<LeaderGroup> groups;  // ordered by smallest member
  int l1 = 0;     // root nodes
  int l2sb = 0;   // balanced source components
  int l2sub = 0;  // unbalanced source components
  std::vector<int> leaders;    // union of group members, sorted
  std::vector<int> followers;  // complement, sorted

  int group_count() const { return l1 + l2sb + l2sub; }
};

LeaderStructure leader_groups(const SignedDigraph& g);

// Node polarity assignment d in {+1,-1}^n. For a balanced graph every edge
// satisfies d_tail * d_head = sign.
struct GaugeVector {
  std::vector<int> d;  // d[i-1] is the value at node i
};

struct BalanceResult {
  bool balanced = false;
  std::optional<GaugeVector> gauge;  // present iff balanced
};

// Two-colorability of the underlying undirected signed graph, by sign
// propagation. The lowest-indexed node of each connected component is fixed
// to +1 so the gauge is deterministic. The overload restricted to `nodes`
// evaluates the induced subgraph; gauge entries outside `nodes` are +1.
BalanceResult is_structurally_balanced(const SignedDigraph& g);
BalanceResult is_structurally_balanced(const SignedDigraph& g,
                                       const std::vector<int>& nodes);

// True iff the condensation has exactly one source component, i.e. some node
// reaches every node.
bool has_directed_spanning_tree(const SignedDigraph& g);

// True iff there are at least two leader groups and every follower is
// reachable from the leader set (existential reading: one leader suffices).
bool check_multi_leader_hypothesis(const SignedDigraph& g,
                                   const LeaderStructure& ls);

// Stricter diagnostic: every follower reachable from every individual leader
// group. Not required by any prediction; exposed for inspection only.
bool followers_reachable_from_every_group(const SignedDigraph& g,
                                          const LeaderStructure& ls);

bool weakly_connected(const SignedDigraph& g);

// Preconditions shared by the structural predictions: either a directed
// spanning tree, or multiple leader groups with every follower reachable from
// the leader set and a weakly connected graph (the multiplicity table is not
// additive over disconnected unions). Throws std::invalid_argument otherwise.
void require_assumptions(const SignedDigraph& g, const LeaderStructure& ls,
                         bool spanning_tree);

}  // namespace edgesync

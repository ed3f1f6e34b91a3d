#include "edgesync/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace edgesync {

ValidationReport validate(const SignedDigraph& g) {
  ValidationReport rep;
  auto add = [&rep](const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back(msg);
  };

  if (g.n < 1) add("node count must be positive, got " + std::to_string(g.n));

  std::map<std::pair<int, int>, int> first_seen;  // (tail,head) -> edge number
  std::map<std::pair<int, int>, int> sign_of;
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges[k];
    std::ostringstream at;
    at << "edge " << (k + 1) << " (" << e.tail << "," << e.head << ")";
    if (e.tail < 1 || e.tail > g.n || e.head < 1 || e.head > g.n) {
      add(at.str() + ": node index out of range 1.." + std::to_string(g.n));
      continue;
    }
    if (e.sign != 1 && e.sign != -1)
      add(at.str() + ": sign must be +1 or -1, got " + std::to_string(e.sign));
    if (e.tail == e.head) add(at.str() + ": self-loop");

    auto key = std::make_pair(e.tail, e.head);
    auto it = first_seen.find(key);
    if (it != first_seen.end()) {
      add(at.str() + ": duplicate of edge " + std::to_string(it->second + 1));
    } else {
      first_seen[key] = k;
      sign_of[key] = e.sign;
    }
    auto rev = sign_of.find(std::make_pair(e.head, e.tail));
    if (rev != sign_of.end() && rev->second != e.sign) {
      std::ostringstream msg;
      msg << "digon sign asymmetry at (" << e.head << "," << e.tail << ")/("
          << e.tail << "," << e.head << ")";
      add(msg.str());
    }
  }
  return rep;
}

void require_valid(const SignedDigraph& g) {
  ValidationReport rep = validate(g);
  if (rep.ok) return;
  std::string msg = "invalid graph:";
  for (const auto& v : rep.violations) msg += "\n  " + v;
  throw std::invalid_argument(msg);
}

namespace {

std::vector<std::vector<int>> out_adjacency(const SignedDigraph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (const Edge& e : g.edges) adj[e.tail - 1].push_back(e.head - 1);
  return adj;
}

std::vector<std::vector<int>> undirected_adjacency(const SignedDigraph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (const Edge& e : g.edges) {
    adj[e.tail - 1].push_back(e.head - 1);
    adj[e.head - 1].push_back(e.tail - 1);
  }
  return adj;
}

// Marks everything reachable from the already-true entries of `seen`.
void bfs_forward(const std::vector<std::vector<int>>& adj,
                 std::vector<char>& seen) {
  std::deque<int> queue;
  for (int v = 0; v < static_cast<int>(seen.size()); ++v)
    if (seen[v]) queue.push_back(v);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  }
}

}  // namespace

SccResult strongly_connected_components(const SignedDigraph& g) {
  require_valid(g);
  const int n = g.n;
  auto adj = out_adjacency(g);

  // Iterative Tarjan.
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;
  int next_index = 0;

  struct Frame {
    int v;
    std::size_t child;
  };
  for (int s = 0; s < n; ++s) {
    if (index[s] != -1) continue;
    std::vector<Frame> call;
    index[s] = low[s] = next_index++;
    stack.push_back(s);
    on_stack[s] = 1;
    call.push_back({s, 0});
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.child < adj[f.v].size()) {
        int w = adj[f.v][f.child++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          std::vector<int> comp;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp.push_back(w + 1);
            if (w == f.v) break;
          }
          std::sort(comp.begin(), comp.end());
          comps.push_back(std::move(comp));
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }

  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  SccResult r;
  r.components = std::move(comps);
  r.component_of.assign(n, -1);
  for (int ci = 0; ci < static_cast<int>(r.components.size()); ++ci)
    for (int v : r.components[ci]) r.component_of[v - 1] = ci;

  std::set<std::pair<int, int>> ce;
  for (const Edge& e : g.edges) {
    int a = r.component_of[e.tail - 1];
    int b = r.component_of[e.head - 1];
    if (a != b) ce.insert({a, b});
  }
  r.condensation_edges.assign(ce.begin(), ce.end());
  return r;
}

BalanceResult is_structurally_balanced(const SignedDigraph& g) {
  std::vector<int> all(g.n);
  for (int i = 0; i < g.n; ++i) all[i] = i + 1;
  return is_structurally_balanced(g, all);
}

BalanceResult is_structurally_balanced(const SignedDigraph& g,
                                       const std::vector<int>& nodes) {
  require_valid(g);
  std::vector<char> member(g.n, 0);
  for (int v : nodes) member[v - 1] = 1;

  // Undirected signed adjacency restricted to the member set.
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (neighbor, sign)
  for (const Edge& e : g.edges) {
    if (!member[e.tail - 1] || !member[e.head - 1]) continue;
    adj[e.tail - 1].push_back({e.head - 1, e.sign});
    adj[e.head - 1].push_back({e.tail - 1, e.sign});
  }

  std::vector<int> d(g.n, 1);
  std::vector<char> visited(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    if (!member[s] || visited[s]) continue;
    visited[s] = 1;
    d[s] = 1;  // component anchor, fixes the global sign freedom
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto [w, sign] : adj[v]) {
        int want = d[v] * sign;
        if (!visited[w]) {
          visited[w] = 1;
          d[w] = want;
          queue.push_back(w);
        } else if (d[w] != want) {
          return {false, std::nullopt};
        }
      }
    }
  }
  GaugeVector gv;
  gv.d = std::move(d);
  return {true, std::move(gv)};
}

LeaderStructure leader_groups(const SignedDigraph& g) {
  SccResult scc = strongly_connected_components(g);
  std::vector<char> has_incoming(scc.components.size(), 0);
  for (auto [a, b] : scc.condensation_edges) has_incoming[b] = 1;

  LeaderStructure ls;
  for (int ci = 0; ci < static_cast<int>(scc.components.size()); ++ci) {
    if (has_incoming[ci]) continue;
    LeaderGroup group;
    group.members = scc.components[ci];
    if (group.members.size() == 1) {
      group.kind = GroupKind::Root;  // self-loops are banned, so no inner edge
      ++ls.l1;
    } else {
      BalanceResult b = is_structurally_balanced(g, group.members);
      group.kind = b.balanced ? GroupKind::SccSB : GroupKind::SccSUB;
      (b.balanced ? ls.l2sb : ls.l2sub) += 1;
    }
    ls.groups.push_back(std::move(group));
  }

  std::vector<char> is_leader(g.n, 0);
  for (const auto& grp : ls.groups)
    for (int v : grp.members) is_leader[v - 1] = 1;
  for (int v = 1; v <= g.n; ++v)
    (is_leader[v - 1] ? ls.leaders : ls.followers).push_back(v);
  return ls;
}

bool has_directed_spanning_tree(const SignedDigraph& g) {
  SccResult scc = strongly_connected_components(g);
  std::vector<char> has_incoming(scc.components.size(), 0);
  for (auto [a, b] : scc.condensation_edges) has_incoming[b] = 1;
  int sources = 0;
  for (char h : has_incoming)
    if (!h) ++sources;
  return sources == 1;
}

bool check_multi_leader_hypothesis(const SignedDigraph& g,
                                   const LeaderStructure& ls) {
  if (ls.group_count() <= 1) return false;
  std::vector<char> seen(g.n, 0);
  for (int v : ls.leaders) seen[v - 1] = 1;
  bfs_forward(out_adjacency(g), seen);
  for (int v : ls.followers)
    if (!seen[v - 1]) return false;
  return true;
}

bool followers_reachable_from_every_group(const SignedDigraph& g,
                                          const LeaderStructure& ls) {
  auto adj = out_adjacency(g);
  for (const auto& grp : ls.groups) {
    std::vector<char> seen(g.n, 0);
    for (int v : grp.members) seen[v - 1] = 1;
    bfs_forward(adj, seen);
    for (int v : ls.followers)
      if (!seen[v - 1]) return false;
  }
  return true;
}

bool weakly_connected(const SignedDigraph& g) {
  require_valid(g);
  std::vector<char> seen(g.n, 0);
  seen[0] = 1;
  bfs_forward(undirected_adjacency(g), seen);
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

void require_assumptions(const SignedDigraph& g, const LeaderStructure& ls,
                         bool spanning_tree) {
  if (spanning_tree) return;
  if (ls.group_count() <= 1)
    throw std::invalid_argument(
        "graph has a single leader group but no directed spanning tree");
  if (!weakly_connected(g))
    throw std::invalid_argument(
        "structural predictions require a weakly connected digraph");
  if (!check_multi_leader_hypothesis(g, ls))
    throw std::invalid_argument(
        "multi-leader analysis requires every follower to be reachable from "
        "the leader set");
}

}  // namespace edgesync

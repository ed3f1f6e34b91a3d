#include "edgesync/random_graph.hpp"

#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace edgesync {

namespace {

// std::uniform_*_distribution results are implementation-defined; these
// helpers keep the byte stream reproducible across standard libraries.
int uniform_int(std::mt19937_64& gen, int lo, int hi) {
  return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
}

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

int random_sign(std::mt19937_64& gen, double neg_prob) {
  return uniform01(gen) < neg_prob ? -1 : 1;
}

}  // namespace

SignedDigraph random_leader_graph(const RandomGraphParams& p,
                                  std::uint64_t seed) {
  if (p.n < 1) throw std::invalid_argument("n must be positive");
  if (p.roots < 0 || p.sb_sccs < 0 || p.sub_sccs < 0)
    throw std::invalid_argument("group counts must be nonnegative");
  if (p.scc_size < 2)
    throw std::invalid_argument("scc_size must be at least 2");
  if (p.density < 0.0 || p.density > 1.0 || p.neg_prob < 0.0 || p.neg_prob > 1.0)
    throw std::invalid_argument("density and neg_prob must lie in [0,1]");
  if (p.force_sb && p.sub_sccs > 0)
    throw std::invalid_argument(
        "force_sb is incompatible with unbalanced leader components");

  const int m = p.roots + p.sb_sccs + p.sub_sccs;
  if (m < 1) throw std::invalid_argument("at least one leader group required");
  const int sub_size = std::max(p.scc_size, 3);  // a 2-cycle is always balanced
  const int leader_total =
      p.roots + p.sb_sccs * p.scc_size + p.sub_sccs * sub_size;
  if (leader_total > p.n)
    throw std::invalid_argument("leader groups need " +
                                std::to_string(leader_total) +
                                " nodes but n = " + std::to_string(p.n));
  const int followers = p.n - leader_total;
  if (m > 1 && followers == 0)
    throw std::invalid_argument(
        "multiple leader groups require at least one follower");

  std::mt19937_64 gen(seed);

  // Node layout and a global polarity used whenever signs must be consistent.
  std::vector<std::vector<int>> groups;
  int next = 1;
  for (int i = 0; i < p.roots; ++i) groups.push_back({next++});
  for (int i = 0; i < p.sb_sccs; ++i) {
    std::vector<int> block(p.scc_size);
    for (int& v : block) v = next++;
    groups.push_back(std::move(block));
  }
  for (int i = 0; i < p.sub_sccs; ++i) {
    std::vector<int> block(sub_size);
    for (int& v : block) v = next++;
    groups.push_back(std::move(block));
  }
  const int first_follower = next;

  std::vector<int> d(p.n + 1, 1);
  for (int v = 1; v <= p.n; ++v) d[v] = random_sign(gen, 0.5);

  SignedDigraph g;
  g.n = p.n;
  std::set<std::pair<int, int>> present;
  std::map<std::pair<int, int>, int> sign_of;
  auto push = [&](int tail, int head, int sign) {
    g.edges.push_back({tail, head, sign});
    present.insert({tail, head});
    sign_of[{tail, head}] = sign;
  };

  // Leader components as directed cycles. Balanced: signs follow the
  // polarity. Unbalanced: random signs with the cycle product forced negative.
  for (int gi = 0; gi < static_cast<int>(groups.size()); ++gi) {
    const auto& block = groups[gi];
    const int size = static_cast<int>(block.size());
    if (size == 1) continue;
    const bool balanced = gi < p.roots + p.sb_sccs;
    if (balanced) {
      for (int i = 0; i < size; ++i) {
        int u = block[i], v = block[(i + 1) % size];
        push(u, v, d[u] * d[v]);
      }
    } else {
      int product = 1;
      for (int i = 0; i < size; ++i) {
        int u = block[i], v = block[(i + 1) % size];
        int s;
        if (i + 1 < size) {
          s = random_sign(gen, 0.5);
          product *= s;
        } else {
          s = product > 0 ? -1 : 1;  // odd negative count => unbalanced cycle
        }
        push(u, v, s);
      }
    }
  }

  auto attach_sign = [&](int tail, int head) {
    return p.force_sb ? d[tail] * d[head] : random_sign(gen, p.neg_prob);
  };

  // Followers. The first one bridges every group; the rest hang off any
  // earlier node, so each is reachable from a leader by induction.
  for (int f = first_follower; f <= p.n; ++f) {
    if (f == first_follower) {
      for (const auto& block : groups) {
        int tail = block[uniform_int(gen, 0, static_cast<int>(block.size()) - 1)];
        push(tail, f, attach_sign(tail, f));
      }
    } else {
      int tail = uniform_int(gen, 1, f - 1);
      push(tail, f, attach_sign(tail, f));
    }
  }

  // Extra edges, heads restricted to followers. A new edge closing a digon
  // copies the existing sign to preserve sign-symmetry.
  for (int u = 1; u <= p.n; ++u) {
    for (int v = first_follower; v <= p.n; ++v) {
      if (u == v || present.count({u, v})) continue;
      if (uniform01(gen) >= p.density) continue;
      auto rev = sign_of.find({v, u});
      int s = rev != sign_of.end() ? rev->second : attach_sign(u, v);
      push(u, v, s);
    }
  }

  require_valid(g);
  LeaderStructure ls = leader_groups(g);
  if (ls.l1 != p.roots || ls.l2sb != p.sb_sccs || ls.l2sub != p.sub_sccs)
    throw std::logic_error("generator produced unexpected leader structure");
  if (p.force_sb && !is_structurally_balanced(g).balanced)
    throw std::logic_error("generator failed to produce a balanced graph");
  return g;
}

}  // namespace edgesync

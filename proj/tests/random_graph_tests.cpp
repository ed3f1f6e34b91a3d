#include <stdexcept>

#include "doctest.h"
#include "edgesync/graph.hpp"
#include "edgesync/random_graph.hpp"

using namespace edgesync;

TEST_CASE("same seed reproduces the same graph, different seeds vary") {
  RandomGraphParams p;
  p.n = 12;
  p.roots = 1;
  p.sb_sccs = 1;
  p.sub_sccs = 1;
  SignedDigraph a = random_leader_graph(p, 99);
  SignedDigraph b = random_leader_graph(p, 99);
  CHECK(a == b);
  bool any_different = false;
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    any_different = any_different || !(random_leader_graph(p, seed) == a);
  CHECK(any_different);
}

TEST_CASE("generated graphs are valid and carry the requested groups") {
  for (int roots = 0; roots <= 2; ++roots)
    for (int sb = 0; sb <= 2; ++sb)
      for (int sub = 0; sub <= 1; ++sub) {
        if (roots + sb + sub == 0) continue;
        RandomGraphParams p;
        p.roots = roots;
        p.sb_sccs = sb;
        p.sub_sccs = sub;
        p.n = roots + 3 * (sb + sub) + 3;
        for (std::uint64_t seed : {1ull, 2ull}) {
          SignedDigraph g = random_leader_graph(p, seed);
          CHECK(validate(g).ok);
          LeaderStructure ls = leader_groups(g);
          CHECK(ls.l1 == roots);
          CHECK(ls.l2sb == sb);
          CHECK(ls.l2sub == sub);
          CHECK(static_cast<int>(ls.followers.size()) == 3);
          if (ls.group_count() > 1) {
            CHECK(weakly_connected(g));
            CHECK(check_multi_leader_hypothesis(g, ls));
          }
        }
      }
}

TEST_CASE("forced balance yields a balanced graph") {
  RandomGraphParams p;
  p.roots = 1;
  p.sb_sccs = 2;
  p.n = 12;
  p.density = 0.4;
  p.neg_prob = 0.5;
  p.force_sb = true;
  for (std::uint64_t seed : {3ull, 4ull, 5ull}) {
    SignedDigraph g = random_leader_graph(p, seed);
    CHECK(is_structurally_balanced(g).balanced);
  }
}

TEST_CASE("unforced graphs still satisfy digon sign-symmetry") {
  RandomGraphParams p;
  p.roots = 2;
  p.sub_sccs = 1;
  p.n = 10;
  p.density = 0.6;  // high density forces digon closures to happen
  for (std::uint64_t seed = 0; seed < 4; ++seed)
    CHECK(validate(random_leader_graph(p, seed)).ok);
}

TEST_CASE("infeasible parameters are rejected") {
  RandomGraphParams p;
  p.roots = 5;
  p.n = 3;
  CHECK_THROWS_AS(random_leader_graph(p, 1), std::invalid_argument);

  RandomGraphParams zero;
  zero.roots = 0;
  zero.sb_sccs = 0;
  zero.sub_sccs = 0;
  CHECK_THROWS_AS(random_leader_graph(zero, 1), std::invalid_argument);

  RandomGraphParams tiny;
  tiny.scc_size = 1;
  tiny.sb_sccs = 1;
  CHECK_THROWS_AS(random_leader_graph(tiny, 1), std::invalid_argument);

  RandomGraphParams clash;
  clash.force_sb = true;
  clash.sub_sccs = 1;
  clash.n = 12;
  CHECK_THROWS_AS(random_leader_graph(clash, 1), std::invalid_argument);

  RandomGraphParams no_follower;  // multi-leader graphs need a follower
  no_follower.roots = 2;
  no_follower.n = 2;
  CHECK_THROWS_AS(random_leader_graph(no_follower, 1), std::invalid_argument);

  RandomGraphParams bad_density;
  bad_density.density = 1.5;
  CHECK_THROWS_AS(random_leader_graph(bad_density, 1), std::invalid_argument);
}

TEST_CASE("single leader group produces a spanning tree") {
  RandomGraphParams p;
  p.roots = 1;
  p.n = 8;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    SignedDigraph g = random_leader_graph(p, seed);
    CHECK(has_directed_spanning_tree(g));
  }
  RandomGraphParams cyc;
  cyc.roots = 0;
  cyc.sub_sccs = 1;
  cyc.n = 7;
  CHECK(has_directed_spanning_tree(random_leader_graph(cyc, 11)));
}

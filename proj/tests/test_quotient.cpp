#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "gridrig/errors.hpp"
#include "gridrig/generators.hpp"
#include "gridrig/isomorphism.hpp"

using namespace gridrig;
using namespace fixtures;

namespace {

using EdgeSet = std::set<std::pair<int, int>>;

EdgeSet edge_set(const CoveringGraph& g, const std::vector<int>& relabel) {
  EdgeSet out;
  for (const auto& e : g.edges()) {
    int a = relabel[static_cast<std::size_t>(e.a)];
    int b = relabel[static_cast<std::size_t>(e.b)];
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

std::vector<int> identity(std::size_t n) {
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<int>(i);
  return out;
}

// Balance via fundamental cycles of a BFS forest, independent of the union-find.
bool fundamental_cycle_balanced(const SignedQuotientGraph& q, const std::vector<std::size_t>& subset) {
  const std::size_t n = q.orbit_count();
  std::vector<int> potential(n, 0);
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (auto i : subset) {
    const auto& e = q.edges()[i];
    if (e.is_loop()) return false;  // a loop is a cycle of gain -1
    adj[static_cast<std::size_t>(e.u)].push_back({e.v, e.gain});
    adj[static_cast<std::size_t>(e.v)].push_back({e.u, e.gain});
  }
  for (std::size_t root = 0; root < n; ++root) {
    if (potential[root] != 0) continue;
    potential[root] = 1;
    std::vector<std::size_t> queue{root};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const auto x = queue[k];
      for (auto [y, g] : adj[x]) {
        auto& py = potential[static_cast<std::size_t>(y)];
        if (py == 0) {
          py = potential[x] * g;
          queue.push_back(static_cast<std::size_t>(y));
        }
      }
    }
  }
  // every non-tree edge closes a fundamental cycle of gain p(u) g p(v)
  for (auto i : subset) {
    const auto& e = q.edges()[i];
    if (potential[static_cast<std::size_t>(e.u)] * e.gain * potential[static_cast<std::size_t>(e.v)] != 1) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("quotient") {
  TEST_CASE("single loop covers K2 with one fixed edge") {
    const auto g = build_covering(single_loop());
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.fixed_edge_count() == 1);
    CHECK(g.vertices() == std::vector<std::string>{"a", "-a"});
  }

  TEST_CASE("gain graph example covers the 6-vertex 9-edge graph") {
    const auto g = build_covering(gain_graph_example());
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 9);
    CHECK(g.fixed_edge_count() == 1);
  }

  TEST_CASE("2K3-[e] covers a 6-vertex 10-edge graph") {
    const auto g = build_covering(two_k3_minus_edge());
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 10);
    CHECK(g.fixed_edge_count() == 0);
  }

  TEST_CASE("quotient invariants are enforced") {
    CHECK_THROWS_AS(SignedQuotientGraph({"a"}, std::vector<NamedGainEdge>{{"l", "a", "a", 1}}), InvalidInput);
    CHECK_THROWS_AS(
        SignedQuotientGraph({"a", "b"}, std::vector<NamedGainEdge>{{"x", "a", "b", 1}, {"y", "b", "a", 1}}),
        InvalidInput);
    CHECK_THROWS_AS(SignedQuotientGraph({"a", "b"}, std::vector<NamedGainEdge>{{"x", "a", "b", 2}}), InvalidInput);
    CHECK_THROWS_AS(SignedQuotientGraph({"a"}, std::vector<NamedGainEdge>{{"x", "a", "z", 1}}), InvalidInput);
  }

  TEST_CASE("covering graph rejects a non-closed edge set") {
    CHECK_THROWS_AS(CoveringGraph({"a", "-a", "b", "-b"}, {1, 0, 3, 2}, {{"e", 0, 2}}), InvalidInput);
    CHECK_THROWS_AS(CoveringGraph({"a", "-a"}, {0, 1}, {}), InvalidInput);
  }

  TEST_CASE("build_quotient of K2 gives a loop") {
    const CoveringGraph g({"v", "-v"}, {1, 0}, {{"e", 0, 1}});
    const std::vector<int> reps{0};
    const auto q = build_quotient(g, reps);
    REQUIRE(q.edge_count() == 1);
    CHECK(q.edges()[0].is_loop());
    CHECK(q.edges()[0].gain == -1);
  }

  TEST_CASE("4-cycle quotient is a parallel pair with gains +1 and -1") {
    // v w -v -w
    const CoveringGraph g({"v", "-v", "w", "-w"}, {1, 0, 3, 2},
                          {{"e1", 0, 2}, {"e2", 2, 1}, {"e1'", 1, 3}, {"e2'", 3, 0}});
    const std::vector<int> reps{0, 2};
    const auto q = build_quotient(g, reps);
    REQUIRE(q.edge_count() == 2);
    std::multiset<int> gains{q.edges()[0].gain, q.edges()[1].gain};
    CHECK(gains == std::multiset<int>{-1, 1});
    CHECK(!balance(q, all_edges(q)).balanced);
  }

  TEST_CASE("build_quotient rejects a non-transversal") {
    const CoveringGraph g({"v", "-v", "w", "-w"}, {1, 0, 3, 2}, {{"e", 0, 2}, {"e'", 1, 3}});
    const std::vector<int> reps{0, 1};
    CHECK_THROWS_AS(build_quotient(g, reps), InvalidInput);
  }

  TEST_CASE("build_quotient of the covering recovers the gain graph") {
    const auto q = gain_graph_example();
    const auto g = build_covering(q);
    const std::vector<int> reps{0, 2, 4};
    CHECK(build_quotient(g, reps) == q);
    const std::vector<int> other{1, 2, 5};
    CHECK(switching_isomorphic(build_quotient(g, other), q));
  }

  TEST_CASE("switching flips non-loop gains and keeps loops") {
    const auto q = gain_graph_example();
    const int c = q.orbit_index("c");
    const auto s = switch_orbit(q, c);
    CHECK(s.edges()[q.edge_index("cb")].gain == -1);
    CHECK(s.edges()[q.edge_index("ca")].gain == -1);
    CHECK(s.edges()[q.edge_index("ab")].gain == 1);
    CHECK(s.edges()[q.edge_index("cc")].gain == -1);
    CHECK(switch_orbit(s, c) == q);
  }

  TEST_CASE("switching relabels the covering graph by v <-> -v") {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const auto q = random_quotient(rng, 5, 10);
      const int o = static_cast<int>(rng() % q.orbit_count());
      const auto before = build_covering(q);
      const auto after = build_covering(switch_orbit(q, o));
      auto relabel = identity(before.vertex_count());
      std::swap(relabel[static_cast<std::size_t>(2 * o)], relabel[static_cast<std::size_t>(2 * o + 1)]);
      CHECK(edge_set(before, relabel) == edge_set(after, identity(after.vertex_count())));
    }
  }

  TEST_CASE("balance on small cases") {
    const SignedQuotientGraph tri({"a", "b", "c"}, std::vector<NamedGainEdge>{
                                                       {"1", "a", "b", 1}, {"2", "b", "c", 1}, {"3", "c", "a", -1}});
    CHECK(!balance(tri, all_edges(tri)).balanced);
    const std::vector<std::size_t> path{0, 1};
    const auto b = balance(tri, path);
    REQUIRE(b.balanced);
    REQUIRE(b.signing);
    const auto& s = *b.signing;
    CHECK(s[0] * s[1] == 1);
    CHECK(s[1] * s[2] == 1);
    const std::vector<std::size_t> bad{7};
    CHECK_THROWS_AS(balance(tri, bad), InvalidInput);
  }

  TEST_CASE("union-find balance agrees with fundamental cycles and survives switching") {
    Rng rng(5);
    for (int trial = 0; trial < 500; ++trial) {
      const auto q = random_quotient(rng, 5, 12);
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < q.edge_count(); ++i) {
        if (rng() % 2) subset.push_back(i);
      }
      const auto b = balance(q, subset);
      CHECK(b.balanced == fundamental_cycle_balanced(q, subset));
      if (b.balanced) {
        for (auto i : subset) {
          const auto& e = q.edges()[i];
          CHECK((*b.signing)[static_cast<std::size_t>(e.u)] * (*b.signing)[static_cast<std::size_t>(e.v)] == e.gain);
        }
      }
      const auto s = switch_orbit(q, static_cast<int>(rng() % q.orbit_count()));
      CHECK(balance(s, subset).balanced == b.balanced);
    }
  }

  TEST_CASE("classification of spanning trees and map graphs") {
    const auto loop = single_loop();
    const auto c = classify_subgraph(loop, all_edges(loop));
    CHECK(c.is_unbalanced_map_graph);
    CHECK(c.contains_connected_spanning_unbalanced_map_graph);
    CHECK(!c.is_tree);

    // parallel pair +1/-1 plus a pendant edge
    const SignedQuotientGraph q({"a", "b", "c"}, std::vector<NamedGainEdge>{
                                                     {"p", "a", "b", 1}, {"m", "a", "b", -1}, {"t", "b", "c", 1}});
    const auto d = classify_subgraph(q, all_edges(q));
    CHECK(d.spanning);
    CHECK(d.connected);
    CHECK(d.is_unbalanced_map_graph);
    CHECK(d.contains_connected_spanning_unbalanced_map_graph);
    REQUIRE(d.witness);
    const auto w = classify_subgraph(q, *d.witness);
    CHECK(w.contains_connected_spanning_unbalanced_map_graph);

    const std::vector<std::size_t> tree{0, 2};
    const auto t = classify_subgraph(q, tree);
    CHECK(t.is_tree);
    CHECK(!t.is_unbalanced_map_graph);
  }

  TEST_CASE("map graph iff every component has |E| = |V| and is unbalanced") {
    Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
      const auto q = random_quotient(rng, 5, 8);
      const auto c = classify_subgraph(q, all_edges(q));
      bool expect = !c.components.empty();
      for (const auto& comp : c.components) expect = expect && comp.edge_count == comp.vertex_count && !comp.balanced;
      CHECK(c.is_unbalanced_map_graph == expect);
      if (c.witness) CHECK(classify_subgraph(q, *c.witness).contains_connected_spanning_unbalanced_map_graph);
    }
  }
}

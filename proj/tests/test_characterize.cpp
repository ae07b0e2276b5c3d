#include <doctest.h>

#include "fixtures.hpp"
#include "gridrig/characterize.hpp"
#include "gridrig/generators.hpp"

using namespace gridrig;
using namespace fixtures;

TEST_SUITE("characterize") {
  TEST_CASE("symmetric example: F1 is a map graph, F2 a tree") {
    const auto f = sym_example();
    const auto c = characterize(f);
    CHECK(c.f1.is_unbalanced_map_graph);
    CHECK(c.f1.spanning);
    CHECK(c.f2.is_tree);
    CHECK(c.f2.spanning);
    CHECK(c.sym_isostatic_c);
    CHECK(!c.anti_isostatic_c);
    CHECK(!c.inf_rigid_c);
    CHECK(crosscheck(f).agree());
  }

  TEST_CASE("anti example: roles swapped") {
    const auto f = anti_example();
    const auto c = characterize(f);
    CHECK(c.f1.is_tree);
    CHECK(c.f2.is_unbalanced_map_graph);
    CHECK(c.anti_isostatic_c);
    CHECK(!c.sym_isostatic_c);
    CHECK(crosscheck(f).agree());
  }

  TEST_CASE("K2 is symmetrically isostatic both ways") {
    const auto f = SymmetricFramework::from_representatives(single_loop(), QuadNorm::linf(), {v("1", "2")});
    const auto rec = crosscheck(f);
    CHECK(rec.characterization.sym_isostatic_c);
    CHECK(rec.report.sym_isostatic);
    CHECK(rec.agree());
  }

  TEST_CASE("a rigid instance with 2|V0| edges") {
    // F1 should get the loop and a path, F2 the parallel pair plus a pendant edge.
    const SignedQuotientGraph q({"a", "b", "c"}, std::vector<NamedGainEdge>{{"la", "a", "a", -1},
                                                                             {"ac", "a", "c", 1},
                                                                             {"bc-", "b", "c", -1},
                                                                             {"ab+", "a", "b", 1},
                                                                             {"ab-", "a", "b", -1},
                                                                             {"bc+", "b", "c", 1}});
    Rng rng(1);
    bool found = false;
    for (int attempt = 0; attempt < 2000 && !found; ++attempt) {
      auto f = random_framework(rng, q, QuadNorm::linf(), 8);
      if (!f) continue;
      const auto rec = crosscheck(*f);
      CHECK(rec.agree());
      if (rec.characterization.inf_rigid_c) {
        found = true;
        CHECK(rec.report.inf_rigid);
        CHECK(rec.characterization.f1.witness);
        CHECK(rec.characterization.f2.witness);
      }
    }
    CHECK(found);
  }

  TEST_CASE("certificates re-classify") {
    Rng rng(64);
    for (int i = 0; i < 200; ++i) {
      const auto f = random_corpus_framework(rng, 5, QuadNorm::linf());
      const auto c = characterize(f);
      const auto& q = f.quotient();
      for (const auto* cls : {&c.f1, &c.f2}) {
        if (cls->witness) CHECK(classify_subgraph(q, *cls->witness).contains_connected_spanning_unbalanced_map_graph);
      }
      CHECK(c.decomposition.f1_edges.size() + c.decomposition.f2_edges.size() == q.edge_count());
      CHECK(sym_isostatic_condition(q, c.decomposition) == c.sym_isostatic_c);
      CHECK(anti_isostatic_condition(q, c.decomposition) == c.anti_isostatic_c);
    }
  }

  TEST_CASE("random corpus: rank and combinatorial verdicts agree") {
    const auto s = run_crosscheck(300, 5, 2718);
    CHECK(s.cases == 300);
    CHECK(s.failures.empty());
    CHECK(s.sym_isostatic > 0);
    CHECK(s.anti_isostatic > 0);
    CHECK(s.inf_rigid > 0);
  }

  TEST_CASE("the crosscheck also holds in the l1 norm") {
    const auto s = run_crosscheck(150, 4, 3, QuadNorm::l1());
    CHECK(s.failures.empty());
  }
}

#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "gridrig/errors.hpp"
#include "gridrig/generators.hpp"
#include "gridrig/sparsity.hpp"

using namespace gridrig;
using namespace fixtures;

namespace {

SignedQuotientGraph k4(bool extra_parallel) {
  std::vector<NamedGainEdge> edges{{"01", "0", "1", 1}, {"02", "0", "2", 1}, {"03", "0", "3", 1},
                                   {"12", "1", "2", 1}, {"13", "1", "3", 1}, {"23", "2", "3", 1}};
  if (extra_parallel) edges.push_back({"01-", "0", "1", -1});
  return SignedQuotientGraph({"0", "1", "2", "3"}, edges);
}

SignedQuotientGraph permuted(const SignedQuotientGraph& q, const std::vector<int>& perm) {
  std::vector<GainEdge> edges;
  for (const auto& e : q.edges()) {
    int u = perm[static_cast<std::size_t>(e.u)];
    int v = perm[static_cast<std::size_t>(e.v)];
    edges.push_back({e.id, std::min(u, v), std::max(u, v), e.gain});
  }
  std::vector<std::string> names(q.orbit_count());
  for (std::size_t i = 0; i < q.orbit_count(); ++i) names[static_cast<std::size_t>(perm[i])] = q.orbits()[i];
  return SignedQuotientGraph(names, edges);
}

}  // namespace

TEST_SUITE("sparsity") {
  TEST_CASE("single loop is (2,2,1)-tight") {
    const auto v = check_gain_sparse(single_loop(), SparsityVariant::k221);
    CHECK(v.sparse);
    CHECK(v.tight);
    CHECK(!v.witness);
    CHECK(is_gain_tight(single_loop()));
    CHECK(!is_gain_tight(single_loop(), true));
  }

  TEST_CASE("2K3-[e] is tight and loopless") {
    CHECK(is_gain_tight(two_k3_minus_edge(), true));
    CHECK(is_gain_tight(gain_graph_example()));
    CHECK(!is_gain_tight(gain_graph_example(), true));
  }

  TEST_CASE("balanced K4 is sparse but not tight") {
    const auto v = check_gain_sparse(k4(false), SparsityVariant::k221);
    CHECK(v.sparse);
    CHECK(!v.tight);
  }

  TEST_CASE("K4 with an extra gain -1 parallel is tight") {
    const auto v = check_gain_sparse(k4(true), SparsityVariant::k221);
    CHECK(v.sparse);
    CHECK(v.tight);
    CHECK(oracle_gain_sparse_edge_subsets(k4(true), SparsityVariant::k221).tight);
  }

  TEST_CASE("balanced triangle plus parallel chord fails with a balanced witness") {
    // 4 balanced edges on 3 orbits exceeds 2*3-2
    const SignedQuotientGraph q({"a", "b", "c"}, std::vector<NamedGainEdge>{{"1", "a", "b", 1},
                                                                             {"2", "b", "c", 1},
                                                                             {"3", "c", "a", 1},
                                                                             {"4", "a", "b", -1},
                                                                             {"5", "b", "c", -1},
                                                                             {"6", "c", "a", -1}});
    const auto v = check_gain_sparse(q, SparsityVariant::k221);
    CHECK(!v.sparse);
    REQUIRE(v.witness);
    CHECK(static_cast<long>(v.witness->edge_count) > v.witness->bound);
  }

  TEST_CASE("(2,2,0) counts") {
    const SignedQuotientGraph q({"a", "b"}, std::vector<NamedGainEdge>{
                                                {"p", "a", "b", 1}, {"m", "a", "b", -1}, {"la", "a", "a", -1}, {"lb", "b", "b", -1}});
    const auto v220 = check_gain_sparse(q, SparsityVariant::k220);
    CHECK(v220.sparse);
    CHECK(v220.tight);
    CHECK(!check_gain_sparse(q, SparsityVariant::k221).sparse);
  }

  TEST_CASE("loopless requirement produces a loop witness") {
    const auto v = check_gain_sparse(gain_graph_example(), SparsityVariant::k221, true);
    CHECK(!v.sparse);
    REQUIRE(v.witness);
    CHECK(v.witness->clause == SparsityWitness::Clause::kLoop);
  }

  TEST_CASE("size limits") {
    std::vector<std::string> names;
    for (int i = 0; i < 21; ++i) names.push_back("v" + std::to_string(i));
    const SignedQuotientGraph big(names, std::vector<GainEdge>{});
    CHECK_THROWS_AS(check_gain_sparse(big, SparsityVariant::k221), SizeLimitExceeded);
    std::vector<GainEdge> edges;
    for (int i = 0; i < 19; ++i) edges.push_back({"e" + std::to_string(i), i, i, -1});
    const SignedQuotientGraph loops(names, edges);
    CHECK_THROWS_AS(oracle_gain_sparse_edge_subsets(loops, SparsityVariant::k221), SizeLimitExceeded);
  }

  TEST_CASE("vertex scan agrees with the edge-subset oracle") {
    Rng rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
      const auto q = random_quotient(rng, 5, 12);
      for (auto variant : {SparsityVariant::k221, SparsityVariant::k220}) {
        const auto fast = check_gain_sparse(q, variant);
        const auto slow = oracle_gain_sparse_edge_subsets(q, variant);
        CHECK(fast.sparse == slow.sparse);
        CHECK(fast.tight == slow.tight);
        if (fast.witness) CHECK(static_cast<long>(fast.witness->edge_count) > fast.witness->bound);
        if (fast.tight) CHECK(fast.sparse);
      }
    }
  }

  TEST_CASE("verdicts are invariant under switching and relabelling") {
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
      const auto q = random_quotient(rng, 5, 11);
      std::vector<int> perm(q.orbit_count());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto p = permuted(q, perm);
      const auto s = switch_orbit(q, static_cast<int>(rng() % q.orbit_count()));
      for (auto variant : {SparsityVariant::k221, SparsityVariant::k220}) {
        const auto base = check_gain_sparse(q, variant);
        CHECK(check_gain_sparse(p, variant).sparse == base.sparse);
        CHECK(check_gain_sparse(p, variant).tight == base.tight);
        CHECK(check_gain_sparse(s, variant).sparse == base.sparse);
        CHECK(check_gain_sparse(s, variant).tight == base.tight);
      }
      if (check_gain_sparse(q, SparsityVariant::k221).tight) {
        CHECK(q.edge_count() == 2 * q.orbit_count() - 1);
      }
    }
  }
}

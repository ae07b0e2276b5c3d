#include <doctest.h>

#include "fixtures.hpp"
#include "gridrig/errors.hpp"
#include "gridrig/generators.hpp"
#include "gridrig/realize.hpp"
#include "gridrig/sparsity.hpp"

using namespace gridrig;
using namespace fixtures;

namespace {

ConstructionSequence sequence_for(const SignedQuotientGraph& q, Mode mode) { return extract_sequence(q, mode); }

void check_mode(const RealizationResult& r, Mode mode) {
  const auto n = r.framework.quotient().orbit_count();
  if (mode == Mode::kSym) {
    CHECK(r.report.sym_isostatic);
    CHECK(r.certificate.sym_isostatic_c);
    CHECK(r.report.o1.rank == 2 * n - 1);
    CHECK(r.report.o1.nullity == 1);
  } else {
    CHECK(r.report.anti_isostatic);
    CHECK(r.certificate.anti_isostatic_c);
    CHECK(r.report.o2.rank == 2 * n - 1);
    CHECK(r.report.o2.nullity == 1);
  }
  CHECK(crosscheck(r.framework).agree());
  CHECK(validate_symmetric(r.framework).mirror_vertices.empty());
}

}  // namespace

TEST_SUITE("realize") {
  TEST_CASE("empty symmetric sequence gives K2 across the mirror") {
    const auto r = realize(sequence_for(single_loop(), Mode::kSym), QuadNorm::linf());
    CHECK(r.framework.placement().size() == 2);
    check_mode(r, Mode::kSym);
  }

  TEST_CASE("gain graph example realizes symmetrically") {
    const auto r = realize(sequence_for(gain_graph_example(), Mode::kSym), QuadNorm::linf(), 5);
    CHECK(r.framework.placement().size() == 6);
    check_mode(r, Mode::kSym);
    CHECK(r.certificate.f1.is_unbalanced_map_graph);
    CHECK(r.certificate.f2.is_tree);
  }

  TEST_CASE("frozen 2K3-[e] base is anti-isostatic") {
    const auto g = frozen_two_k3_graph();
    CHECK(is_two_k3_minus_edge(g));
    const auto p = frozen_two_k3_placement();
    REQUIRE(p.size() == 3);
    CHECK(p[0] == v("-1/2", "0"));
    CHECK(p[1] == v("-1/2", "3/2"));
    CHECK(p[2] == v("-3/2", "0"));
    // normalized coordinates are user coordinates for the axis labelling
    const auto f = SymmetricFramework::from_representatives(g, axis_norm(), p);
    const auto rec = crosscheck(f);
    CHECK(rec.report.anti_isostatic);
    CHECK(rec.characterization.anti_isostatic_c);
    CHECK(!rec.report.sym_isostatic);
  }

  TEST_CASE("two copies of 2K3-[e] joined by an edge give a 12-joint anti-isostatic framework") {
    const SignedQuotientGraph piece({"x", "y", "z"}, std::vector<NamedGainEdge>{{"xy+", "x", "y", 1},
                                                                                 {"xy-", "x", "y", -1},
                                                                                 {"zy+", "z", "y", 1},
                                                                                 {"zy-", "z", "y", -1},
                                                                                 {"zx+", "z", "x", 1}});
    ConstructionSequence s;
    s.mode = Mode::kAnti;
    s.base = BaseKind::kTwoK3MinusEdge;
    s.base_graph = two_k3_minus_edge();
    s.moves.push_back(K3JoinMove{piece, JoinEdge{"j", "a", "z", -1}, false});
    const auto r = realize(s, QuadNorm::linf(), 1);
    CHECK(r.framework.placement().size() == 12);
    check_mode(r, Mode::kAnti);
  }

  TEST_CASE("realization is deterministic and transports across norms") {
    Rng rng(12);
    for (int i = 0; i < 12; ++i) {
      const Mode mode = i % 2 ? Mode::kAnti : Mode::kSym;
      const auto q = random_tight_graph(rng, 6, mode);
      const auto seq = extract_sequence(q, mode);
      const auto a = realize(seq, QuadNorm::linf(), 9);
      const auto b = realize(seq, QuadNorm::linf(), 9);
      CHECK(a.framework.placement() == b.framework.placement());
      check_mode(a, mode);
      for (const auto& n : {QuadNorm::l1(), QuadNorm(v("2", "1"), v("-1", "3"))}) {
        const auto c = realize(seq, n, 9);
        check_mode(c, mode);
        CHECK(c.certificate.decomposition.colour == a.certificate.decomposition.colour);
        CHECK(c.report.o1.rank == a.report.o1.rank);
        CHECK(c.report.o2.rank == a.report.o2.rank);
        for (std::size_t k = 0; k < q.orbit_count(); ++k) {
          const int o = static_cast<int>(k);
          CHECK(n.normalize(c.framework.representative(o)) == QuadNorm::linf().normalize(a.framework.representative(o)));
        }
      }
    }
  }

  TEST_CASE("random realizer") {
    const auto loop = random_realize(single_loop(), QuadNorm::linf(), RandomTarget::kSym, 3, 10);
    CHECK(loop.attempts == 1);
    CHECK(loop.report.sym_isostatic);
    const auto anti = random_realize(two_k3_minus_edge(), QuadNorm::linf(), RandomTarget::kAnti, 3, 500);
    CHECK(anti.report.anti_isostatic);
    CHECK(anti.certificate.anti_isostatic_c);
    CHECK_THROWS_AS(random_realize(two_k3_minus_edge(), QuadNorm::linf(), RandomTarget::kRigid, 3, 200), Exhausted);
  }

  TEST_CASE("K4 plus a parallel edge is anti-isostatic somewhere despite having no construction") {
    const SignedQuotientGraph q({"a", "b", "c", "d"}, std::vector<NamedGainEdge>{{"ab", "a", "b", 1},
                                                                                {"ac", "a", "c", 1},
                                                                                {"ad", "a", "d", 1},
                                                                                {"bc", "b", "c", 1},
                                                                                {"bd", "b", "d", 1},
                                                                                {"cd", "c", "d", 1},
                                                                                {"bd-", "b", "d", -1}});
    CHECK(is_gain_tight(q, true));
    const auto r = random_realize(q, QuadNorm::linf(), RandomTarget::kAnti, 1, 2000);
    CHECK(r.report.anti_isostatic);
    CHECK(r.certificate.anti_isostatic_c);
    CHECK(!r.report.sym_isostatic);
  }
}

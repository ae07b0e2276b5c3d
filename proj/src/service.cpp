#include "gridrig/service.hpp"

#include <optional>

#include "gridrig/errors.hpp"
#include "gridrig/generators.hpp"
#include "gridrig/realize.hpp"
#include "gridrig/rigidity.hpp"

namespace gridrig::service {

namespace {

constexpr int kRandomRealizeAttempts = 2000;

Json vectors_json(const std::vector<RationalVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(io::to_json(x));
    out.push_back(row);
  }
  return out;
}

}  // namespace

QuadNorm norm_from_spec(const std::string& spec) {
  if (spec == "linf" || spec == "l1") return io::norm_from_json(Json(spec), "");
  return io::norm_from_json(io::read_file(spec), "");
}

SignedQuotientGraph quotient_of(const Json& doc) {
  if (doc.is_object() && doc.contains("quotient")) return io::quotient_from_json(doc["quotient"], "/quotient");
  return io::quotient_from_json(doc);
}

Json disagreements_json(const std::vector<Disagreement>& ds) {
  Json out = Json::array();
  for (const auto& d : ds) {
    out.push_back(Json{{"predicate", d.predicate}, {"rank", d.rank_verdict}, {"combinatorial", d.combinatorial_verdict}});
  }
  return out;
}

Json analyze(const Json& framework_doc, bool lifted_flexes) {
  const SymmetricFramework f = io::framework_from_json(framework_doc);
  const auto diag = validate_symmetric(f);
  if (!diag.valid) {
    std::string msg = "framework is not a valid symmetric placement;";
    for (const auto& e : diag.degenerate_edges) msg += " degenerate edge " + e;
    throw InvalidInput(msg);
  }
  const CrosscheckRecord rec = crosscheck(f);
  const RationalMatrix o1 = orbit_matrix_sym(f);
  const RationalMatrix o2 = orbit_matrix_anti(f);
  const auto k1 = flex_space(o1, FlexKind::kSymmetricOrbit).vectors;
  const auto k2 = flex_space(o2, FlexKind::kAntiSymmetricOrbit).vectors;
  Json flexes{{"orbit_columns", o1.col_labels()}, {"symmetric", vectors_json(k1)}, {"anti_symmetric", vectors_json(k2)}};
  if (lifted_flexes) {
    std::vector<RationalVector> lifted1;
    std::vector<RationalVector> lifted2;
    for (const auto& v : k1) lifted1.push_back(lift_flex(f, v, LiftKind::kSym));
    for (const auto& v : k2) lifted2.push_back(lift_flex(f, v, LiftKind::kAnti));
    flexes["covering_columns"] = rigidity_matrix(f).col_labels();
    flexes["lifted_symmetric"] = vectors_json(lifted1);
    flexes["lifted_anti_symmetric"] = vectors_json(lifted2);
  }
  Json mirror = diag.mirror_vertices;
  return Json{{"report", io::to_json(rec.report)},
              {"characterization", io::to_json(rec.characterization, f.quotient())},
              {"agree", rec.agree()},
              {"disagreements", disagreements_json(rec.disagreements)},
              {"mirror_vertices", mirror},
              {"flexes", flexes}};
}

Json sparsity(const Json& quotient_doc, SparsityVariant variant, bool loopless) {
  const auto q = quotient_of(quotient_doc);
  return io::to_json(check_gain_sparse(q, variant, loopless), q);
}

Json construct(const Json& quotient_doc, Mode mode) { return io::to_json(extract_sequence(quotient_of(quotient_doc), mode)); }

Json realize(const Json& doc, Mode mode, const QuadNorm& norm, std::uint64_t seed) {
  std::optional<ConstructionSequence> seq;
  std::optional<SignedQuotientGraph> q;
  if (doc.is_object() && doc.contains("moves")) {
    seq = io::sequence_from_json(doc);
    if (seq->mode != mode) throw InvalidInput("sequence was built for " + to_string(seq->mode) + " mode");
  } else {
    q = quotient_of(doc);
    try {
      seq = extract_sequence(*q, mode);
    } catch (const Exhausted&) {
      // Some loopless tight graphs have no anti-mode construction sequence
      // (K4 plus a parallel edge is the smallest); sample a placement instead.
    }
  }
  Json j;
  if (seq) {
    const auto result = gridrig::realize(*seq, norm, seed);
    j = io::to_json(result.framework);
    j["realization"] = Json{{"method", "constructive"},
                            {"mode", to_string(mode)},
                            {"moves", seq->moves.size()},
                            {"shrink_steps", result.shrink_steps},
                            {"sym_isostatic", result.report.sym_isostatic},
                            {"anti_isostatic", result.report.anti_isostatic}};
    return j;
  }
  const auto target = mode == Mode::kSym ? RandomTarget::kSym : RandomTarget::kAnti;
  const auto result = random_realize(*q, norm, target, seed, kRandomRealizeAttempts);
  j = io::to_json(result.framework);
  j["realization"] = Json{{"method", "random"},
                          {"mode", to_string(mode)},
                          {"attempts", result.attempts},
                          {"sym_isostatic", result.report.sym_isostatic},
                          {"anti_isostatic", result.report.anti_isostatic}};
  return j;
}

std::pair<Json, std::size_t> crosscheck(std::size_t cases, std::size_t max_orbits, std::uint64_t seed,
                                        const QuadNorm& norm) {
  const auto summary = run_crosscheck(cases, max_orbits, seed, norm);
  return {io::to_json(summary), summary.failures.size()};
}

}  // namespace gridrig::service

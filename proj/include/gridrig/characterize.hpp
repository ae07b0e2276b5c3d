#pragma once

#include <string>
#include <vector>

#include "gridrig/geometry.hpp"
#include "gridrig/quotient.hpp"
#include "gridrig/rigidity.hpp"

namespace gridrig {

struct CharacterizationReport {
  MonochromeDecomposition decomposition;
  SubgraphClassification f1;  // G_{F1,0}
  SubgraphClassification f2;  // G_{F2,0}
  bool f1_cover_spanning_tree = false;
  bool f2_cover_spanning_tree = false;
  bool sym_isostatic_c = false;
  bool anti_isostatic_c = false;
  bool inf_rigid_c = false;
  bool nonsym_isostatic_c = false;
};

/// Throws IllPositioned when some bar lies on a cone boundary.
CharacterizationReport characterize(const SymmetricFramework& f);

/// Combinatorial predicates on a quotient graph with a given edge colouring.
bool sym_isostatic_condition(const SignedQuotientGraph& q, const MonochromeDecomposition& d);
bool anti_isostatic_condition(const SignedQuotientGraph& q, const MonochromeDecomposition& d);

struct Disagreement {
  std::string predicate;
  bool rank_verdict = false;
  bool combinatorial_verdict = false;
};

struct CrosscheckRecord {
  RigidityReport report;
  CharacterizationReport characterization;
  std::vector<Disagreement> disagreements;
  bool agree() const { return disagreements.empty(); }
};

CrosscheckRecord crosscheck(const SymmetricFramework& f);

}  // namespace gridrig

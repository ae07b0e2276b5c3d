#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridrig/geometry.hpp"
#include "gridrig/matrix.hpp"

namespace gridrig {

/// A framework without symmetry, for the plain rigidity matrix.
struct PlainFramework {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<Vec2> placement;
  QuadNorm norm = QuadNorm::linf();
};

/// Rigidity matrix df of the covering framework. Rows follow covering edge
/// order, columns are (x, y) of each covering vertex. Throws IllPositioned.
RationalMatrix rigidity_matrix(const SymmetricFramework& f);
RationalMatrix rigidity_matrix(const PlainFramework& f);

/// Signed facet functional of a bar from p_a to p_b (+-F1hat or +-F2hat).
Vec2 bar_functional(const QuadNorm& norm, const Vec2& pa, const Vec2& pb);

/// Symmetric orbit matrix O1: one row per quotient edge, two columns per orbit.
RationalMatrix orbit_matrix_sym(const SymmetricFramework& f);

/// Maps each non-loop edge id to the orbit its orientation starts from.
using Orientation = std::map<std::string, std::string>;

/// Default orientation: from the lexicographically smaller orbit name.
Orientation default_orientation(const SignedQuotientGraph& q);

/// Anti-symmetric orbit matrix O2: one row per non-loop edge. Throws
/// InvalidInput unless the orientation covers exactly the non-loop edges.
RationalMatrix orbit_matrix_anti(const SymmetricFramework& f, const std::optional<Orientation>& orientation = {});

enum class FlexKind { kFull, kSymmetricOrbit, kAntiSymmetricOrbit };

struct FlexBasis {
  FlexKind kind = FlexKind::kFull;
  std::vector<RationalVector> vectors;
};

FlexBasis flex_space(const RationalMatrix& m, FlexKind kind = FlexKind::kFull);

struct TrivialFlexDims {
  int t = 2;
  int t1 = 1;
  int t2 = 1;
};

/// Dimensions of the trivial flexes, computed from ranks of I, I+T and I-T.
TrivialFlexDims trivial_flex_dims(const QuadNorm& norm);

/// Translation flexes of the covering framework: both coordinate
/// translations, the mirror-direction one (symmetric) and the normal one
/// (anti-symmetric).
struct TrivialFlexes {
  std::vector<RationalVector> full;
  RationalVector symmetric;
  RationalVector anti_symmetric;
};
TrivialFlexes trivial_flexes(const SymmetricFramework& f);

/// Splits a covering-level vector into symmetric and anti-symmetric parts.
std::pair<RationalVector, RationalVector> decompose_flex(const SymmetricFramework& f, const RationalVector& u);

bool is_symmetric_vector(const SymmetricFramework& f, const RationalVector& u);
bool is_anti_symmetric_vector(const SymmetricFramework& f, const RationalVector& u);

enum class LiftKind { kSym, kAnti };

/// Lifts an orbit vector (two entries per orbit) to the covering vertices.
RationalVector lift_flex(const SymmetricFramework& f, const RationalVector& orbit_vector, LiftKind kind);

struct MatrixStats {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::size_t nullity = 0;
};

struct RigidityReport {
  bool well_positioned = true;
  std::size_t orbits = 0;
  std::size_t edge_orbits = 0;
  std::size_t non_loop_edge_orbits = 0;
  std::size_t fixed_edges = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  MatrixStats df;
  MatrixStats o1;
  MatrixStats o2;
  TrivialFlexDims trivial;
  bool inf_rigid = false;
  bool isostatic = false;
  bool sym_rigid = false;
  bool sym_isostatic = false;
  bool anti_rigid = false;
  bool anti_isostatic = false;
};

/// Throws IllPositioned when some bar lies on a cone boundary.
RigidityReport rigidity_report(const SymmetricFramework& f);

}  // namespace gridrig

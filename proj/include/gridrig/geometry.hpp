#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "gridrig/quotient.hpp"
#include "gridrig/rational.hpp"

namespace gridrig {

/// Facet class of a bar: F1 when |F1hat.x| > |F2hat.x|, F2 when the reverse holds.
enum class Colour { kF1, kF2 };

std::string to_string(Colour c);

/// 2x2 rational matrix acting on column vectors.
struct Matrix2 {
  std::array<std::array<Rational, 2>, 2> m;

  Vec2 operator*(const Vec2& x) const { return {m[0][0] * x[0] + m[0][1] * x[1], m[1][0] * x[0] + m[1][1] * x[1]}; }
  Matrix2 operator*(const Matrix2& o) const;
  bool operator==(const Matrix2&) const = default;
  static Matrix2 identity();
};

/// Norm on the plane whose unit ball is the quadrilateral
/// { x : |F1hat.x| <= 1, |F2hat.x| <= 1 }.
///
/// The normalizing map N(x) = (F1hat.x, F2hat.x) is a linear isometry onto
/// the max-norm plane. The reflection fixes ker(F1hat) pointwise and negates
/// ker(F2hat); in normalized coordinates it is (u1, u2) -> (-u1, u2), so the
/// mirror is the line u1 = 0.
class QuadNorm {
 public:
  /// Throws InvalidInput when the functionals are linearly dependent.
  QuadNorm(Vec2 f1hat, Vec2 f2hat);

  static QuadNorm linf();  // F1hat = (0,1), F2hat = (1,0)
  static QuadNorm l1();    // F1hat = (1,1), F2hat = (1,-1)

  const Vec2& f1hat() const { return f1_; }
  const Vec2& f2hat() const { return f2_; }
  const Vec2& facet_functional(Colour c) const { return c == Colour::kF1 ? f1_ : f2_; }

  Rational norm(const Vec2& x) const;
  Rational phi(Colour c, const Vec2& x) const { return dot(facet_functional(c), x); }

  Vec2 normalize(const Vec2& x) const { return normalizer_ * x; }
  Vec2 denormalize(const Vec2& u) const { return denormalizer_ * u; }
  const Matrix2& normalizer() const { return normalizer_; }
  const Matrix2& denormalizer() const { return denormalizer_; }

  /// The reflection tau(-1) = I - 2P, P the projection onto ker(F2hat) along ker(F1hat).
  const Matrix2& reflection() const { return reflection_; }
  Vec2 reflect(const Vec2& x) const { return reflection_ * x; }
  /// tau(gamma): identity for +1, the reflection for -1.
  Vec2 act(int gamma, const Vec2& x) const { return gamma > 0 ? x : reflect(x); }

  /// Unit direction of the mirror (normalized coordinates (0,1)) and of the
  /// reflection axis (normalized (1,0)), in user coordinates.
  Vec2 mirror_direction() const { return denormalize(make_vec(0, 1)); }
  Vec2 normal_direction() const { return denormalize(make_vec(1, 0)); }

  bool operator==(const QuadNorm& o) const { return f1_ == o.f1_ && f2_ == o.f2_; }

 private:
  Vec2 f1_;
  Vec2 f2_;
  Matrix2 normalizer_;
  Matrix2 denormalizer_;
  Matrix2 reflection_;
};

/// Rank of a 2x2 rational matrix.
int rank2(const Matrix2& m);

/// Colour of a bar with direction `diff`, or nothing when it lies on a cone boundary.
std::optional<Colour> bar_colour(const QuadNorm& norm, const Vec2& diff);

/// Covering graph, norm, and one position per covering vertex. Covering
/// vertex 2i is the representative of orbit i and 2i+1 its image.
class SymmetricFramework {
 public:
  SymmetricFramework(SignedQuotientGraph quotient, QuadNorm norm, std::vector<Vec2> placement);

  /// Places each representative and derives the images by the reflection.
  static SymmetricFramework from_representatives(SignedQuotientGraph quotient, QuadNorm norm, std::vector<Vec2> reps);

  const SignedQuotientGraph& quotient() const { return quotient_; }
  const CoveringGraph& covering() const { return covering_; }
  const QuadNorm& norm() const { return norm_; }
  const std::vector<Vec2>& placement() const { return placement_; }
  const Vec2& position(int covering_vertex) const { return placement_.at(static_cast<std::size_t>(covering_vertex)); }
  const Vec2& representative(int orbit) const { return position(covering_vertex(orbit, 1)); }
  std::vector<Vec2> representatives() const;

  /// Direction p_u~ - tau(gain) p_v~ of the representative copy of a quotient edge.
  Vec2 edge_direction(std::size_t edge) const;

 private:
  SignedQuotientGraph quotient_;
  CoveringGraph covering_;
  QuadNorm norm_;
  std::vector<Vec2> placement_;
};

struct MonochromeDecomposition {
  std::vector<Colour> colour;             // one per quotient edge
  std::vector<std::size_t> f1_edges;      // quotient edges of colour F1
  std::vector<std::size_t> f2_edges;      // quotient edges of colour F2
  const std::vector<std::size_t>& edges_of(Colour c) const { return c == Colour::kF1 ? f1_edges : f2_edges; }
};

/// Edge ids (quotient ids, plus covering ids for image copies) whose bar
/// direction is on a cone boundary.
struct IllPositionedEdges {
  std::vector<std::string> edges;
};

/// Colours every edge orbit. Throws InvalidInput if the placement is not
/// Z2-symmetric.
std::variant<MonochromeDecomposition, IllPositionedEdges> colour_edges(const SymmetricFramework& f);

/// Like colour_edges but throws IllPositioned on failure.
MonochromeDecomposition require_well_positioned(const SymmetricFramework& f);

struct SymmetryDiagnostics {
  bool valid = true;
  std::vector<std::string> asymmetric_vertices;  // p_{-v} != T p_v
  std::vector<std::string> degenerate_edges;     // p_v == p_w across an edge
  std::vector<std::string> mirror_vertices;      // joints on the mirror (allowed, flagged)
};

SymmetryDiagnostics validate_symmetric(const SymmetricFramework& f);

}  // namespace gridrig

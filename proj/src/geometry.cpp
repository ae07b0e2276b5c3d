#include "gridrig/geometry.hpp"

#include "gridrig/errors.hpp"

namespace gridrig {

std::string to_string(Colour c) { return c == Colour::kF1 ? "F1" : "F2"; }

Matrix2 Matrix2::operator*(const Matrix2& o) const {
  Matrix2 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
  }
  return r;
}

Matrix2 Matrix2::identity() { return Matrix2{{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}}}; }

int rank2(const Matrix2& m) {
  if (m.m[0][0] * m.m[1][1] - m.m[0][1] * m.m[1][0] != 0) return 2;
  for (const auto& row : m.m) {
    for (const auto& x : row) {
      if (x != 0) return 1;
    }
  }
  return 0;
}

QuadNorm::QuadNorm(Vec2 f1hat, Vec2 f2hat) : f1_(std::move(f1hat)), f2_(std::move(f2hat)) {
  const Rational det = f1_[0] * f2_[1] - f1_[1] * f2_[0];
  if (det == 0) throw InvalidInput("facet functionals F1hat and F2hat are linearly dependent");
  normalizer_ = Matrix2{{{{f1_[0], f1_[1]}, {f2_[0], f2_[1]}}}};
  denormalizer_ = Matrix2{{{{f2_[1] / det, -f1_[1] / det}, {-f2_[0] / det, f1_[0] / det}}}};
  const Matrix2 flip{{{{Rational(-1), Rational(0)}, {Rational(0), Rational(1)}}}};
  reflection_ = denormalizer_ * (flip * normalizer_);
}

QuadNorm QuadNorm::linf() { return QuadNorm(make_vec(0, 1), make_vec(1, 0)); }
QuadNorm QuadNorm::l1() { return QuadNorm(make_vec(1, 1), make_vec(1, -1)); }

Rational QuadNorm::norm(const Vec2& x) const {
  const Rational a = abs(dot(f1_, x));
  const Rational b = abs(dot(f2_, x));
  return a > b ? a : b;
}

std::optional<Colour> bar_colour(const QuadNorm& norm, const Vec2& diff) {
  const Vec2 u = norm.normalize(diff);
  const Rational a = abs(u[0]);
  const Rational b = abs(u[1]);
  if (a > b) return Colour::kF1;
  if (b > a) return Colour::kF2;
  return std::nullopt;
}

SymmetricFramework::SymmetricFramework(SignedQuotientGraph quotient, QuadNorm norm, std::vector<Vec2> placement)
    : quotient_(std::move(quotient)),
      covering_(build_covering(quotient_)),
      norm_(std::move(norm)),
      placement_(std::move(placement)) {
  if (placement_.size() != covering_.vertex_count()) {
    throw InvalidInput("placement needs one position per covering vertex");
  }
}

SymmetricFramework SymmetricFramework::from_representatives(SignedQuotientGraph quotient, QuadNorm norm,
                                                            std::vector<Vec2> reps) {
  if (reps.size() != quotient.orbit_count()) throw InvalidInput("need one representative position per orbit");
  std::vector<Vec2> placement;
  placement.reserve(2 * reps.size());
  for (const auto& p : reps) {
    placement.push_back(p);
    placement.push_back(norm.reflect(p));
  }
  return SymmetricFramework(std::move(quotient), std::move(norm), std::move(placement));
}

std::vector<Vec2> SymmetricFramework::representatives() const {
  std::vector<Vec2> out;
  for (std::size_t i = 0; i < quotient_.orbit_count(); ++i) out.push_back(representative(static_cast<int>(i)));
  return out;
}

Vec2 SymmetricFramework::edge_direction(std::size_t edge) const {
  const auto& e = quotient_.edges().at(edge);
  if (e.is_loop()) return position(covering_vertex(e.u, 1)) - position(covering_vertex(e.u, -1));
  return position(covering_vertex(e.u, 1)) - position(covering_vertex(e.v, e.gain));
}

SymmetryDiagnostics validate_symmetric(const SymmetricFramework& f) {
  SymmetryDiagnostics d;
  const auto& g = f.covering();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const int m = g.mirror(static_cast<int>(v));
    if (f.norm().reflect(f.position(static_cast<int>(v))) != f.position(m)) {
      d.asymmetric_vertices.push_back(g.vertices()[v]);
    }
    if (v % 2 == 0 && f.norm().normalize(f.position(static_cast<int>(v)))[0] == 0) {
      d.mirror_vertices.push_back(g.vertices()[v]);
    }
  }
  for (const auto& e : g.edges()) {
    if (f.position(e.a) == f.position(e.b)) d.degenerate_edges.push_back(e.id);
  }
  d.valid = d.asymmetric_vertices.empty() && d.degenerate_edges.empty();
  return d;
}

std::variant<MonochromeDecomposition, IllPositionedEdges> colour_edges(const SymmetricFramework& f) {
  const auto& g = f.covering();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (f.norm().reflect(f.position(static_cast<int>(v))) != f.position(g.mirror(static_cast<int>(v)))) {
      throw InvalidInput("placement is not Z2-symmetric at vertex '" + g.vertices()[v] + "'");
    }
  }
  MonochromeDecomposition dec;
  IllPositionedEdges ill;
  const auto& q = f.quotient();
  for (std::size_t i = 0; i < q.edge_count(); ++i) {
    // image copies share the colour because the reflection preserves |F_j . x|
    const auto c = bar_colour(f.norm(), f.edge_direction(i));
    if (!c) {
      ill.edges.push_back(q.edges()[i].id);
      continue;
    }
    dec.colour.push_back(*c);
    (*c == Colour::kF1 ? dec.f1_edges : dec.f2_edges).push_back(i);
  }
  if (!ill.edges.empty()) return ill;
  return dec;
}

MonochromeDecomposition require_well_positioned(const SymmetricFramework& f) {
  auto result = colour_edges(f);
  if (auto* ill = std::get_if<IllPositionedEdges>(&result)) throw IllPositioned(ill->edges);
  return std::get<MonochromeDecomposition>(std::move(result));
}

}  // namespace gridrig

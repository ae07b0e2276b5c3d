#include "gridrig/rigidity.hpp"

#include <set>

#include "gridrig/errors.hpp"

namespace gridrig {

namespace {

void set_block(RationalMatrix& m, std::size_t row, std::size_t block, const Vec2& value, int factor = 1) {
  m.at(row, 2 * block) += factor * value[0];
  m.at(row, 2 * block + 1) += factor * value[1];
}

std::vector<std::string> coordinate_labels(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) {
    out.push_back(n + ".x");
    out.push_back(n + ".y");
  }
  return out;
}

MatrixStats stats_of(const RationalMatrix& m) {
  MatrixStats s;
  s.rows = m.rows();
  s.cols = m.cols();
  s.rank = rank(m);
  s.nullity = s.cols - s.rank;
  return s;
}

void check_length(const SymmetricFramework& f, const RationalVector& u) {
  if (u.size() != 2 * f.covering().vertex_count()) {
    throw InvalidInput("flex vector needs two entries per covering vertex");
  }
}

Vec2 block_of(const RationalVector& u, std::size_t v) { return {u[2 * v], u[2 * v + 1]}; }

}  // namespace

Vec2 bar_functional(const QuadNorm& norm, const Vec2& pa, const Vec2& pb) {
  const Vec2 d = pa - pb;
  const auto colour = bar_colour(norm, d);
  if (!colour) throw InvalidInput("bar direction lies on a cone boundary");
  const Vec2& f = norm.facet_functional(*colour);
  return sign_of(dot(f, d)) < 0 ? -f : f;
}

RationalMatrix rigidity_matrix(const SymmetricFramework& f) {
  require_well_positioned(f);
  const auto& g = f.covering();
  RationalMatrix m(g.edge_count(), 2 * g.vertex_count());
  m.col_labels() = coordinate_labels(g.vertices());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges()[i];
    const Vec2 phi = bar_functional(f.norm(), f.position(e.a), f.position(e.b));
    set_block(m, i, static_cast<std::size_t>(e.a), phi, 1);
    set_block(m, i, static_cast<std::size_t>(e.b), phi, -1);
    m.row_labels().push_back(e.id);
  }
  return m;
}

RationalMatrix rigidity_matrix(const PlainFramework& f) {
  if (f.placement.size() != f.vertices.size()) throw InvalidInput("placement needs one position per vertex");
  std::vector<std::string> ill;
  RationalMatrix m(f.edges.size(), 2 * f.vertices.size());
  m.col_labels() = coordinate_labels(f.vertices);
  for (std::size_t i = 0; i < f.edges.size(); ++i) {
    const auto [a, b] = f.edges[i];
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= f.vertices.size() ||
        static_cast<std::size_t>(b) >= f.vertices.size() || a == b) {
      throw InvalidInput("edge endpoints out of range");
    }
    const auto& pa = f.placement[static_cast<std::size_t>(a)];
    const auto& pb = f.placement[static_cast<std::size_t>(b)];
    const std::string label = f.vertices[static_cast<std::size_t>(a)] + f.vertices[static_cast<std::size_t>(b)];
    m.row_labels().push_back(label);
    if (!bar_colour(f.norm, pa - pb)) {
      ill.push_back(label);
      continue;
    }
    const Vec2 phi = bar_functional(f.norm, pa, pb);
    set_block(m, i, static_cast<std::size_t>(a), phi, 1);
    set_block(m, i, static_cast<std::size_t>(b), phi, -1);
  }
  if (!ill.empty()) throw IllPositioned(ill);
  return m;
}

RationalMatrix orbit_matrix_sym(const SymmetricFramework& f) {
  require_well_positioned(f);
  const auto& q = f.quotient();
  RationalMatrix m(q.edge_count(), 2 * q.orbit_count());
  m.col_labels() = coordinate_labels(q.orbits());
  for (std::size_t i = 0; i < q.edge_count(); ++i) {
    const auto& e = q.edges()[i];
    m.row_labels().push_back(e.id);
    const int v = covering_vertex(e.u, 1);
    if (e.is_loop()) {
      const Vec2 phi = bar_functional(f.norm(), f.position(v), f.position(covering_vertex(e.u, -1)));
      set_block(m, i, static_cast<std::size_t>(e.u), phi, 2);
      continue;
    }
    const int w = covering_vertex(e.v, 1);
    set_block(m, i, static_cast<std::size_t>(e.u),
              bar_functional(f.norm(), f.position(v), f.position(covering_vertex(e.v, e.gain))));
    set_block(m, i, static_cast<std::size_t>(e.v),
              bar_functional(f.norm(), f.position(w), f.position(covering_vertex(e.u, e.gain))));
  }
  return m;
}

Orientation default_orientation(const SignedQuotientGraph& q) {
  Orientation o;
  for (const auto& e : q.edges()) {
    if (e.is_loop()) continue;
    const auto& a = q.orbit_name(e.u);
    const auto& b = q.orbit_name(e.v);
    o[e.id] = a < b ? a : b;
  }
  return o;
}

RationalMatrix orbit_matrix_anti(const SymmetricFramework& f, const std::optional<Orientation>& orientation) {
  require_well_positioned(f);
  const auto& q = f.quotient();
  const Orientation o = orientation ? *orientation : default_orientation(q);
  std::set<std::string> expected;
  for (const auto& e : q.edges()) {
    if (!e.is_loop()) expected.insert(e.id);
  }
  for (const auto& [id, tail] : o) {
    if (!expected.count(id)) throw InvalidInput("orientation names '" + id + "', which is not a non-loop edge");
  }
  RationalMatrix m(q.non_loop_count(), 2 * q.orbit_count());
  m.col_labels() = coordinate_labels(q.orbits());
  std::size_t row = 0;
  for (const auto& e : q.edges()) {
    if (e.is_loop()) continue;
    const auto it = o.find(e.id);
    if (it == o.end()) throw InvalidInput("orientation misses edge '" + e.id + "'");
    int tail = e.u;
    int head = e.v;
    if (it->second == q.orbit_name(e.v)) {
      std::swap(tail, head);
    } else if (it->second != q.orbit_name(e.u)) {
      throw InvalidInput("orientation of edge '" + e.id + "' starts at a non-endpoint");
    }
    m.row_labels().push_back(e.id);
    const Vec2 at_tail = bar_functional(f.norm(), f.position(covering_vertex(tail, 1)),
                                        f.position(covering_vertex(head, e.gain)));
    const Vec2 at_head = bar_functional(f.norm(), f.position(covering_vertex(head, 1)),
                                        f.position(covering_vertex(tail, e.gain)));
    set_block(m, row, static_cast<std::size_t>(tail), at_tail);
    set_block(m, row, static_cast<std::size_t>(head), at_head, e.gain);
    ++row;
  }
  return m;
}

FlexBasis flex_space(const RationalMatrix& m, FlexKind kind) { return FlexBasis{kind, nullspace(m)}; }

TrivialFlexDims trivial_flex_dims(const QuadNorm& norm) {
  const Matrix2& t = norm.reflection();
  Matrix2 plus = t;
  Matrix2 minus = t;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Rational id = i == j ? 1 : 0;
      plus.m[i][j] = id + t.m[i][j];
      minus.m[i][j] = id - t.m[i][j];
    }
  }
  // the isometry group of a quadrilateral norm is finite, so only translations are trivial
  return TrivialFlexDims{rank2(Matrix2::identity()), rank2(plus), rank2(minus)};
}

TrivialFlexes trivial_flexes(const SymmetricFramework& f) {
  const std::size_t n = f.covering().vertex_count();
  auto constant = [n](const Vec2& c) {
    RationalVector u(2 * n);
    for (std::size_t v = 0; v < n; ++v) {
      u[2 * v] = c[0];
      u[2 * v + 1] = c[1];
    }
    return u;
  };
  TrivialFlexes t;
  t.full = {constant(make_vec(1, 0)), constant(make_vec(0, 1))};
  t.symmetric = constant(f.norm().mirror_direction());
  t.anti_symmetric = constant(f.norm().normal_direction());
  return t;
}

std::pair<RationalVector, RationalVector> decompose_flex(const SymmetricFramework& f, const RationalVector& u) {
  check_length(f, u);
  const auto& g = f.covering();
  RationalVector a(u.size());
  RationalVector b(u.size());
  const Rational half(1, 2);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Vec2 uv = block_of(u, v);
    const Vec2 tm = f.norm().reflect(block_of(u, static_cast<std::size_t>(g.mirror(static_cast<int>(v)))));
    const Vec2 av = half * (uv + tm);
    const Vec2 bv = half * (uv - tm);
    a[2 * v] = av[0];
    a[2 * v + 1] = av[1];
    b[2 * v] = bv[0];
    b[2 * v + 1] = bv[1];
  }
  return {std::move(a), std::move(b)};
}

bool is_symmetric_vector(const SymmetricFramework& f, const RationalVector& u) {
  check_length(f, u);
  const auto& g = f.covering();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto m = static_cast<std::size_t>(g.mirror(static_cast<int>(v)));
    if (block_of(u, m) != f.norm().reflect(block_of(u, v))) return false;
  }
  return true;
}

bool is_anti_symmetric_vector(const SymmetricFramework& f, const RationalVector& u) {
  check_length(f, u);
  const auto& g = f.covering();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto m = static_cast<std::size_t>(g.mirror(static_cast<int>(v)));
    if (block_of(u, m) != -f.norm().reflect(block_of(u, v))) return false;
  }
  return true;
}

RationalVector lift_flex(const SymmetricFramework& f, const RationalVector& orbit_vector, LiftKind kind) {
  const std::size_t orbits = f.quotient().orbit_count();
  if (orbit_vector.size() != 2 * orbits) throw InvalidInput("orbit vector needs two entries per orbit");
  RationalVector u(4 * orbits);
  for (std::size_t i = 0; i < orbits; ++i) {
    const Vec2 x = block_of(orbit_vector, i);
    Vec2 image = f.norm().reflect(x);
    if (kind == LiftKind::kAnti) image = -image;
    u[4 * i] = x[0];
    u[4 * i + 1] = x[1];
    u[4 * i + 2] = image[0];
    u[4 * i + 3] = image[1];
  }
  return u;
}

RigidityReport rigidity_report(const SymmetricFramework& f) {
  require_well_positioned(f);
  const auto& q = f.quotient();
  RigidityReport r;
  r.orbits = q.orbit_count();
  r.edge_orbits = q.edge_count();
  r.non_loop_edge_orbits = q.non_loop_count();
  r.fixed_edges = f.covering().fixed_edge_count();
  r.vertices = f.covering().vertex_count();
  r.edges = f.covering().edge_count();
  r.df = stats_of(rigidity_matrix(f));
  r.o1 = stats_of(orbit_matrix_sym(f));
  r.o2 = stats_of(orbit_matrix_anti(f));
  r.trivial = trivial_flex_dims(f.norm());
  r.inf_rigid = r.df.nullity == static_cast<std::size_t>(r.trivial.t);
  r.isostatic = r.inf_rigid && r.df.rank == r.edges;
  r.sym_rigid = r.o1.nullity == static_cast<std::size_t>(r.trivial.t1);
  r.sym_isostatic = r.sym_rigid && r.o1.rank == r.edge_orbits;
  r.anti_rigid = r.o2.nullity == static_cast<std::size_t>(r.trivial.t2);
  r.anti_isostatic = r.anti_rigid && r.o2.rank == r.non_loop_edge_orbits && r.fixed_edges == 0;
  return r;
}

}  // namespace gridrig

#include "gridrig/characterize.hpp"

#include <numeric>

namespace gridrig {

namespace {

bool is_k2(const SignedQuotientGraph& q) { return q.orbit_count() == 1 && q.edge_count() == 1 && q.has_loops(); }

bool spanning_map_graph(const SubgraphClassification& c) { return c.spanning && c.is_unbalanced_map_graph; }
bool spanning_tree(const SubgraphClassification& c) { return c.spanning && c.is_tree; }

// Spanning tree test on the covering graph restricted to one colour.
bool covering_spanning_tree(const SymmetricFramework& f, const MonochromeDecomposition& d, Colour colour) {
  const auto& g = f.covering();
  const auto& q = f.quotient();
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // build_covering emits one covering edge per loop and two per other edge, in quotient order
  std::vector<std::size_t> orbit_of;
  for (std::size_t i = 0; i < q.edge_count(); ++i) {
    orbit_of.push_back(i);
    if (!q.edges()[i].is_loop()) orbit_of.push_back(i);
  }
  std::size_t count = 0;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const auto& e = g.edges()[k];
    if (d.colour[orbit_of[k]] != colour) continue;
    ++count;
    const auto a = find(static_cast<std::size_t>(e.a));
    const auto b = find(static_cast<std::size_t>(e.b));
    if (a == b) return false;
    parent[a] = b;
  }
  return count + 1 == g.vertex_count();
}

}  // namespace

bool sym_isostatic_condition(const SignedQuotientGraph& q, const MonochromeDecomposition& d) {
  if (is_k2(q)) return true;
  return spanning_map_graph(classify_subgraph(q, d.f1_edges)) && spanning_tree(classify_subgraph(q, d.f2_edges));
}

bool anti_isostatic_condition(const SignedQuotientGraph& q, const MonochromeDecomposition& d) {
  return spanning_tree(classify_subgraph(q, d.f1_edges)) && spanning_map_graph(classify_subgraph(q, d.f2_edges));
}

CharacterizationReport characterize(const SymmetricFramework& f) {
  CharacterizationReport r;
  r.decomposition = require_well_positioned(f);
  const auto& q = f.quotient();
  r.f1 = classify_subgraph(q, r.decomposition.f1_edges);
  r.f2 = classify_subgraph(q, r.decomposition.f2_edges);
  r.sym_isostatic_c = is_k2(q) || (spanning_map_graph(r.f1) && spanning_tree(r.f2));
  r.anti_isostatic_c = spanning_tree(r.f1) && spanning_map_graph(r.f2);
  r.inf_rigid_c = r.f1.contains_connected_spanning_unbalanced_map_graph &&
                  r.f2.contains_connected_spanning_unbalanced_map_graph;
  r.f1_cover_spanning_tree = covering_spanning_tree(f, r.decomposition, Colour::kF1);
  r.f2_cover_spanning_tree = covering_spanning_tree(f, r.decomposition, Colour::kF2);
  r.nonsym_isostatic_c = r.f1_cover_spanning_tree && r.f2_cover_spanning_tree;
  return r;
}

CrosscheckRecord crosscheck(const SymmetricFramework& f) {
  CrosscheckRecord rec;
  rec.report = rigidity_report(f);
  rec.characterization = characterize(f);
  auto compare = [&rec](const char* name, bool by_rank, bool by_count) {
    if (by_rank != by_count) rec.disagreements.push_back({name, by_rank, by_count});
  };
  compare("sym_isostatic", rec.report.sym_isostatic, rec.characterization.sym_isostatic_c);
  compare("anti_isostatic", rec.report.anti_isostatic, rec.characterization.anti_isostatic_c);
  compare("inf_rigid", rec.report.inf_rigid, rec.characterization.inf_rigid_c);
  compare("isostatic", rec.report.isostatic, rec.characterization.nonsym_isostatic_c);
  return rec;
}

}  // namespace gridrig

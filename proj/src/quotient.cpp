#include "gridrig/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "gridrig/errors.hpp"
#include "gridrig/parity_union_find.hpp"

namespace gridrig {

namespace {

void check_unique_names(const std::vector<std::string>& names, const char* what) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InvalidInput(std::string("empty ") + what + " name");
    if (!seen.insert(n).second) throw InvalidInput(std::string("duplicate ") + what + " '" + n + "'");
  }
}

}  // namespace

SignedQuotientGraph::SignedQuotientGraph(std::vector<std::string> orbits, std::vector<GainEdge> edges)
    : orbits_(std::move(orbits)), edges_(std::move(edges)) {
  check_unique_names(orbits_, "orbit");
  const int n = static_cast<int>(orbits_.size());
  std::set<std::string_view> ids;
  std::set<std::tuple<int, int, int>> slots;
  for (const auto& e : edges_) {
    if (e.id.empty()) throw InvalidInput("edge with empty id");
    if (!ids.insert(e.id).second) throw InvalidInput("duplicate edge id '" + e.id + "'");
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw InvalidInput("edge '" + e.id + "' has an unknown endpoint");
    if (e.gain != 1 && e.gain != -1) throw InvalidInput("edge '" + e.id + "' has gain other than +1/-1");
    if (e.is_loop() && e.gain != -1) throw InvalidInput("loop '" + e.id + "' must have gain -1");
    const auto key = std::make_tuple(std::min(e.u, e.v), std::max(e.u, e.v), e.gain);
    if (!slots.insert(key).second) {
      throw InvalidInput("edge '" + e.id + "' duplicates a parallel edge of equal gain (covering graph would not be simple)");
    }
  }
}

SignedQuotientGraph::SignedQuotientGraph(std::vector<std::string> orbits, const std::vector<NamedGainEdge>& edges) {
  std::map<std::string, int, std::less<>> index;
  for (std::size_t i = 0; i < orbits.size(); ++i) index.emplace(orbits[i], static_cast<int>(i));
  std::vector<GainEdge> resolved;
  resolved.reserve(edges.size());
  for (const auto& e : edges) {
    auto iu = index.find(e.u);
    auto iv = index.find(e.v);
    if (iu == index.end() || iv == index.end()) throw InvalidInput("edge '" + e.id + "' names an unknown orbit");
    resolved.push_back({e.id, iu->second, iv->second, e.gain});
  }
  *this = SignedQuotientGraph(std::move(orbits), std::move(resolved));
}

std::size_t SignedQuotientGraph::loop_count() const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const GainEdge& e) { return e.is_loop(); }));
}

std::optional<int> SignedQuotientGraph::find_orbit(std::string_view name) const {
  for (std::size_t i = 0; i < orbits_.size(); ++i) {
    if (orbits_[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

int SignedQuotientGraph::orbit_index(std::string_view name) const {
  auto i = find_orbit(name);
  if (!i) throw InvalidInput("unknown orbit '" + std::string(name) + "'");
  return *i;
}

std::optional<std::size_t> SignedQuotientGraph::find_edge(std::string_view id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t SignedQuotientGraph::edge_index(std::string_view id) const {
  auto i = find_edge(id);
  if (!i) throw InvalidInput("unknown edge '" + std::string(id) + "'");
  return *i;
}

std::vector<std::size_t> SignedQuotientGraph::incident_edges(int orbit) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u == orbit || edges_[i].v == orbit) out.push_back(i);
  }
  return out;
}

CoveringGraph::CoveringGraph(std::vector<std::string> vertices, std::vector<int> involution, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), involution_(std::move(involution)), edges_(std::move(edges)) {
  check_unique_names(vertices_, "vertex");
  const int n = static_cast<int>(vertices_.size());
  if (involution_.size() != vertices_.size()) throw InvalidInput("involution size differs from vertex count");
  for (int v = 0; v < n; ++v) {
    const int w = involution_[static_cast<std::size_t>(v)];
    if (w < 0 || w >= n) throw InvalidInput("involution maps outside the vertex set");
    if (w == v) throw InvalidInput("involution fixes vertex '" + vertices_[static_cast<std::size_t>(v)] + "'");
    if (involution_[static_cast<std::size_t>(w)] != v) throw InvalidInput("involution is not of order 2");
  }
  std::set<std::pair<int, int>> present;
  for (const auto& e : edges_) {
    if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n) throw InvalidInput("covering edge has an unknown endpoint");
    if (e.a == e.b) throw InvalidInput("covering graph has a loop");
    if (!present.insert(std::minmax(e.a, e.b)).second) throw InvalidInput("covering graph has parallel edges");
  }
  for (const auto& e : edges_) {
    if (!present.count(std::minmax(mirror(e.a), mirror(e.b)))) {
      throw InvalidInput("edge set is not closed under the involution");
    }
  }
}

std::size_t CoveringGraph::fixed_edge_count() const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [this](const Edge& e) { return is_fixed(e); }));
}

std::optional<std::size_t> CoveringGraph::find_edge(int a, int b) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if ((edges_[i].a == a && edges_[i].b == b) || (edges_[i].a == b && edges_[i].b == a)) return i;
  }
  return std::nullopt;
}

CoveringGraph build_covering(const SignedQuotientGraph& q) {
  std::vector<std::string> names;
  std::vector<int> involution;
  for (std::size_t i = 0; i < q.orbit_count(); ++i) {
    names.push_back(q.orbits()[i]);
    names.push_back("-" + q.orbits()[i]);
    involution.push_back(static_cast<int>(2 * i + 1));
    involution.push_back(static_cast<int>(2 * i));
  }
  std::vector<CoveringGraph::Edge> edges;
  for (const auto& e : q.edges()) {
    if (e.is_loop()) {
      edges.push_back({e.id, covering_vertex(e.u, 1), covering_vertex(e.u, -1)});
    } else {
      edges.push_back({e.id, covering_vertex(e.u, 1), covering_vertex(e.v, e.gain)});
      edges.push_back({e.id + "'", covering_vertex(e.u, -1), covering_vertex(e.v, -e.gain)});
    }
  }
  return CoveringGraph(std::move(names), std::move(involution), std::move(edges));
}

SignedQuotientGraph build_quotient(const CoveringGraph& g, std::span<const int> reps) {
  const std::size_t n = g.vertex_count();
  if (reps.size() * 2 != n) throw InvalidInput("representatives must pick exactly one vertex per orbit");
  // gamma[v] = +1 for representatives, -1 for their images; orbit[v] = position in reps.
  std::vector<int> gamma(n, 0);
  std::vector<int> orbit(n, -1);
  std::vector<std::string> orbit_names;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const int r = reps[i];
    if (r < 0 || static_cast<std::size_t>(r) >= n) throw InvalidInput("representative out of range");
    const int m = g.mirror(r);
    if (gamma[static_cast<std::size_t>(r)] != 0 || gamma[static_cast<std::size_t>(m)] != 0) {
      throw InvalidInput("representatives are not a transversal of the orbits");
    }
    gamma[static_cast<std::size_t>(r)] = 1;
    gamma[static_cast<std::size_t>(m)] = -1;
    orbit[static_cast<std::size_t>(r)] = orbit[static_cast<std::size_t>(m)] = static_cast<int>(i);
    orbit_names.push_back(g.vertices()[static_cast<std::size_t>(r)]);
  }
  std::vector<bool> done(g.edge_count(), false);
  std::vector<GainEdge> edges;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (done[i]) continue;
    const auto& e = g.edges()[i];
    done[i] = true;
    const auto image = g.find_edge(g.mirror(e.a), g.mirror(e.b));
    if (image) done[*image] = true;
    const int ua = orbit[static_cast<std::size_t>(e.a)];
    const int ub = orbit[static_cast<std::size_t>(e.b)];
    if (g.is_fixed(e)) {
      edges.push_back({e.id, ua, ua, -1});
    } else {
      edges.push_back({e.id, ua, ub, gamma[static_cast<std::size_t>(e.a)] * gamma[static_cast<std::size_t>(e.b)]});
    }
  }
  return SignedQuotientGraph(std::move(orbit_names), std::move(edges));
}

SignedQuotientGraph switch_orbit(const SignedQuotientGraph& q, int orbit) {
  if (orbit < 0 || static_cast<std::size_t>(orbit) >= q.orbit_count()) throw InvalidInput("switch: unknown orbit");
  std::vector<int> signs(q.orbit_count(), 1);
  signs[static_cast<std::size_t>(orbit)] = -1;
  return apply_switching(q, signs);
}

SignedQuotientGraph apply_switching(const SignedQuotientGraph& q, std::span<const int> signs) {
  if (signs.size() != q.orbit_count()) throw InvalidInput("switching needs one sign per orbit");
  std::vector<GainEdge> edges = q.edges();
  for (auto& e : edges) {
    if (!e.is_loop()) e.gain *= signs[static_cast<std::size_t>(e.u)] * signs[static_cast<std::size_t>(e.v)];
  }
  return SignedQuotientGraph(q.orbits(), std::move(edges));
}

BalanceResult balance(const SignedQuotientGraph& q, std::span<const std::size_t> edge_subset) {
  ParityUnionFind uf(q.orbit_count());
  bool ok = true;
  for (auto i : edge_subset) {
    if (i >= q.edge_count()) throw InvalidInput("balance: edge index out of range");
    const auto& e = q.edges()[i];
    if (e.is_loop() || !uf.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), e.gain)) ok = false;
  }
  BalanceResult result;
  result.balanced = ok;
  if (ok) {
    std::vector<int> signing(q.orbit_count());
    for (std::size_t v = 0; v < q.orbit_count(); ++v) signing[v] = uf.parity_of(v);
    result.signing = std::move(signing);
  }
  return result;
}

SubgraphClassification classify_subgraph(const SignedQuotientGraph& q, std::span<const std::size_t> edge_subset) {
  const std::size_t n = q.orbit_count();
  for (auto i : edge_subset) {
    if (i >= q.edge_count()) throw InvalidInput("classify_subgraph: edge index out of range");
  }
  // Components of the edge-spanned subgraph via plain union-find on parity structure.
  ParityUnionFind conn(n);
  std::vector<bool> touched(n, false);
  for (auto i : edge_subset) {
    const auto& e = q.edges()[i];
    touched[static_cast<std::size_t>(e.u)] = touched[static_cast<std::size_t>(e.v)] = true;
    int pu = 1;
    int pv = 1;
    const auto ru = conn.find(static_cast<std::size_t>(e.u), pu);
    const auto rv = conn.find(static_cast<std::size_t>(e.v), pv);
    if (ru != rv) conn.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), 1);
  }
  std::map<std::size_t, std::size_t> root_to_component;
  SubgraphClassification out;
  for (std::size_t v = 0; v < n; ++v) {
    if (!touched[v]) continue;
    int p = 1;
    const auto r = conn.find(v, p);
    auto [it, inserted] = root_to_component.emplace(r, out.components.size());
    if (inserted) out.components.emplace_back();
    auto& c = out.components[it->second];
    c.orbits.push_back(static_cast<int>(v));
    ++c.vertex_count;
  }
  std::vector<std::vector<std::size_t>> component_edges(out.components.size());
  for (auto i : edge_subset) {
    int p = 1;
    const auto r = conn.find(static_cast<std::size_t>(q.edges()[i].u), p);
    const auto c = root_to_component.at(r);
    ++out.components[c].edge_count;
    component_edges[c].push_back(i);
  }
  for (std::size_t c = 0; c < out.components.size(); ++c) {
    out.components[c].balanced = balance(q, component_edges[c]).balanced;
  }

  const bool any = !out.components.empty();
  out.spanning = std::all_of(touched.begin(), touched.end(), [](bool t) { return t; }) && n > 0;
  out.connected = out.components.size() == 1;
  out.is_tree = out.connected && out.components[0].edge_count + 1 == out.components[0].vertex_count;
  out.is_unbalanced_map_graph = any && std::all_of(out.components.begin(), out.components.end(), [](const ComponentInfo& c) {
                                  return c.edge_count == c.vertex_count && !c.balanced;
                                });
  out.contains_connected_spanning_unbalanced_map_graph = out.spanning && out.connected && !out.components[0].balanced;

  if (out.contains_connected_spanning_unbalanced_map_graph) {
    // Spanning tree by parity union-find; the first edge contradicting the
    // tree signing closes an unbalanced cycle.
    ParityUnionFind tree(n);
    std::vector<std::size_t> witness;
    std::optional<std::size_t> closing;
    for (auto i : edge_subset) {
      const auto& e = q.edges()[i];
      if (e.is_loop()) {
        if (!closing) closing = i;
        continue;
      }
      if (!tree.same(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) {
        tree.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), e.gain);
        witness.push_back(i);
      } else if (!closing && tree.parity_of(static_cast<std::size_t>(e.u)) * tree.parity_of(static_cast<std::size_t>(e.v)) != e.gain) {
        closing = i;
      }
    }
    // relative parity inside a component never changes, so the scan above is complete
    witness.push_back(*closing);
    std::sort(witness.begin(), witness.end());
    out.witness = std::move(witness);
  }
  return out;
}

std::vector<std::size_t> all_edges(const SignedQuotientGraph& q) {
  std::vector<std::size_t> out(q.edge_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

}  // namespace gridrig

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gridrig {

/// One edge orbit of a signed quotient graph. Endpoints index the orbit list;
/// a loop has u == v and always carries gain -1.
struct GainEdge {
  std::string id;
  int u = 0;
  int v = 0;
  int gain = 1;

  bool is_loop() const { return u == v; }
  bool operator==(const GainEdge&) const = default;
};

/// Edge description by orbit names, used when building graphs by hand.
struct NamedGainEdge {
  std::string id;
  std::string u;
  std::string v;
  int gain = 1;
};

/// A Z2-gain graph whose covering graph is simple: loops have gain -1 and
/// parallel edges carry distinct gains. Instances are always valid.
class SignedQuotientGraph {
 public:
  SignedQuotientGraph() = default;
  /// Throws InvalidInput when an invariant is violated.
  SignedQuotientGraph(std::vector<std::string> orbits, std::vector<GainEdge> edges);
  SignedQuotientGraph(std::vector<std::string> orbits, const std::vector<NamedGainEdge>& edges);

  const std::vector<std::string>& orbits() const { return orbits_; }
  const std::vector<GainEdge>& edges() const { return edges_; }
  std::size_t orbit_count() const { return orbits_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t loop_count() const;
  std::size_t non_loop_count() const { return edges_.size() - loop_count(); }
  bool has_loops() const { return loop_count() > 0; }

  std::optional<int> find_orbit(std::string_view name) const;
  int orbit_index(std::string_view name) const;  // throws InvalidInput
  std::optional<std::size_t> find_edge(std::string_view id) const;
  std::size_t edge_index(std::string_view id) const;  // throws InvalidInput

  const std::string& orbit_name(int orbit) const { return orbits_.at(static_cast<std::size_t>(orbit)); }
  /// Edge indices incident to the orbit (a loop is listed once).
  std::vector<std::size_t> incident_edges(int orbit) const;

  bool operator==(const SignedQuotientGraph&) const = default;

 private:
  std::vector<std::string> orbits_;
  std::vector<GainEdge> edges_;
};

/// Simple graph carrying a fixed-point-free involution on its vertices.
class CoveringGraph {
 public:
  struct Edge {
    std::string id;
    int a = 0;
    int b = 0;
  };

  CoveringGraph() = default;
  /// Throws InvalidInput unless the involution is free of order 2, the edge
  /// set is closed under it, and the graph is simple.
  CoveringGraph(std::vector<std::string> vertices, std::vector<int> involution, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<int>& involution() const { return involution_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  int mirror(int vertex) const { return involution_.at(static_cast<std::size_t>(vertex)); }
  bool is_fixed(const Edge& e) const { return mirror(e.a) == e.b; }
  std::size_t fixed_edge_count() const;
  std::optional<std::size_t> find_edge(int a, int b) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<int> involution_;
  std::vector<Edge> edges_;
};

/// Vertex id of the copy gamma * representative of an orbit in build_covering's labelling.
inline int covering_vertex(int orbit, int gamma) { return 2 * orbit + (gamma < 0 ? 1 : 0); }

/// Covering graph of q. Orbit i yields vertex 2i (the representative) and
/// 2i+1 (its image); edge ([u],[v],g) yields {u~, g v~} and {-u~, -g v~},
/// a loop yields the single fixed edge {v~, -v~}. The image copy of edge
/// "e" is named "e'".
CoveringGraph build_covering(const SignedQuotientGraph& q);

/// Quotient of g relative to the representatives `reps` (one vertex per orbit).
/// Gain +1 when an edge of the orbit joins two representatives.
SignedQuotientGraph build_quotient(const CoveringGraph& g, std::span<const int> reps);

/// Replaces the representative of `orbit` by its image: non-loop edges at the
/// orbit flip gain, loops stay at -1.
SignedQuotientGraph switch_orbit(const SignedQuotientGraph& q, int orbit);
/// Applies a switching s (one sign per orbit) in one pass.
SignedQuotientGraph apply_switching(const SignedQuotientGraph& q, std::span<const int> signs);

struct BalanceResult {
  bool balanced = false;
  /// When balanced: s with gain(uv) = s(u)s(v) on the subset (one entry per orbit).
  std::optional<std::vector<int>> signing;
};

/// Balance of an edge subset (indices into q.edges()). Throws InvalidInput
/// for out-of-range indices.
BalanceResult balance(const SignedQuotientGraph& q, std::span<const std::size_t> edge_subset);

struct ComponentInfo {
  std::vector<int> orbits;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool balanced = true;
};

/// Structure of the subgraph spanned by an edge subset. Spanning means the
/// edges touch every orbit.
struct SubgraphClassification {
  bool spanning = false;
  bool connected = false;
  bool is_tree = false;
  bool is_unbalanced_map_graph = false;
  bool contains_connected_spanning_unbalanced_map_graph = false;
  std::vector<ComponentInfo> components;
  /// Spanning tree plus one edge closing an unbalanced cycle, present when
  /// contains_connected_spanning_unbalanced_map_graph holds.
  std::optional<std::vector<std::size_t>> witness;
};

SubgraphClassification classify_subgraph(const SignedQuotientGraph& q, std::span<const std::size_t> edge_subset);

/// All edge indices of q, in order.
std::vector<std::size_t> all_edges(const SignedQuotientGraph& q);

}  // namespace gridrig

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gridrig/quotient.hpp"

namespace gridrig {

enum class Mode { kSym, kAnti };
std::string to_string(Mode mode);

/// New edge from the orbit a move acts on to orbit `to`.
struct Attachment {
  std::string id;
  std::string to;
  int gain = 1;
  bool operator==(const Attachment&) const = default;
};

/// Henneberg 1: new orbit with two edges. For H1c one attachment is the loop
/// (its `to` is the new orbit itself, gain -1).
struct H1Move {
  char variant = 'a';
  std::string orbit;
  std::array<Attachment, 2> edges;
  bool operator==(const H1Move&) const = default;
};

/// Henneberg 2: `removed` is subdivided by the new orbit. The two split
/// edges go to the removed edge's endpoints (either order) and their gains
/// multiply to the removed gain. `extra` is the third edge.
struct H2Move {
  char variant = 'a';
  std::string orbit;
  std::string removed;
  std::array<Attachment, 2> split;
  Attachment extra;
  bool operator==(const H2Move&) const = default;
};

/// Loop replacement of a vertex-to-K4 move: edge between two K4 orbits, gain -1.
struct K4Loop {
  std::string id;
  std::string u;
  std::string v;
  bool operator==(const K4Loop&) const = default;
};

/// Replaces `orbit` by four orbits joined by gain +1 edges with ids in the
/// order 01, 02, 03, 12, 13, 23. Each other edge at the orbit moves to the K4
/// orbit with the index given in `redistribute`.
struct VertexToK4Move {
  std::string orbit;
  std::array<std::string, 4> k4;
  std::array<std::string, 6> k4_edges;
  std::map<std::string, int> redistribute;
  std::optional<K4Loop> loop;
  bool operator==(const VertexToK4Move&) const = default;
};

/// Splits `orbit` into new[0], new[1] along the gain +1 edge `via` to [u].
/// Edge ids: v0v1, v0u, v1u. Each other edge at the orbit (loops included)
/// moves to new[assign[id]].
struct EdgeToK3Move {
  std::string orbit;
  std::string via;
  std::array<std::string, 2> fresh;
  std::array<std::string, 3> new_edges;
  std::map<std::string, int> assign;
  bool operator==(const EdgeToK3Move&) const = default;
};

/// Joins a disjoint graph via one edge from existing orbit `u` to piece orbit `v`.
struct JoinEdge {
  std::string id;
  std::string u;
  std::string v;
  int gain = 1;
  bool operator==(const JoinEdge&) const = default;
};

struct K3JoinMove {
  SignedQuotientGraph piece;
  JoinEdge edge;
  bool generalized = false;
  bool operator==(const K3JoinMove&) const = default;
};

using Move = std::variant<H1Move, H2Move, VertexToK4Move, EdgeToK3Move, K3JoinMove>;

/// Short name such as "H1c", "VertexToK4".
std::string move_name(const Move& m);

/// Throws InvalidInput naming the violated side condition.
SignedQuotientGraph apply_move(const SignedQuotientGraph& q, const Move& m);

/// Whether the move type is part of the mode's construction.
bool move_allowed(const Move& m, Mode mode);

enum class BaseKind { kUnbalancedLoop, kTwoK3MinusEdge };
std::string to_string(BaseKind kind);

struct ConstructionSequence {
  Mode mode = Mode::kSym;
  BaseKind base = BaseKind::kUnbalancedLoop;
  SignedQuotientGraph base_graph;
  std::vector<Move> moves;
};

bool is_unbalanced_loop(const SignedQuotientGraph& q);
bool is_two_k3_minus_edge(const SignedQuotientGraph& q);

struct InverseCandidate {
  Move move;
  SignedQuotientGraph predecessor;
};

/// Every admissible inverse move found by generate-and-verify. Throws
/// InvalidInput when q is not tight in the mode's sense.
std::vector<InverseCandidate> inverse_candidates(const SignedQuotientGraph& q, Mode mode);

/// Throws InvalidInput (with the sparsity witness in the message) when q is
/// not tight in the mode's sense, Exhausted if no inverse move exists.
ConstructionSequence extract_sequence(const SignedQuotientGraph& q, Mode mode);

/// Rebuilds the final graph; every prefix is checked for tightness. Errors
/// name the failing move index.
SignedQuotientGraph replay(const ConstructionSequence& seq);

/// All prefixes of the replay, base first.
std::vector<SignedQuotientGraph> replay_prefixes(const ConstructionSequence& seq);

/// Representatives of every (2,2,1)-gain-tight graph on `orbits` orbits up
/// to switching-isomorphism, in canonical order.
std::vector<SignedQuotientGraph> enumerate_tight_graphs(std::size_t orbits, bool loopless = false);

}  // namespace gridrig

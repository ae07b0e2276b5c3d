#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gridrig/quotient.hpp"

namespace gridrig {

/// (2,2,1): every edge set F has |F| <= 2|V(F)|-1, balanced ones <= 2|V(F)|-2.
/// (2,2,0): bounds 2|V(F)| and 2|V(F)|-2.
enum class SparsityVariant { k221, k220 };

struct SparsityWitness {
  enum class Clause { kAll, kBalanced, kLoop };
  Clause clause = Clause::kAll;
  std::vector<int> orbits;
  std::vector<std::size_t> edges;
  std::size_t edge_count = 0;
  long bound = 0;
};

struct SparsityVerdict {
  bool sparse = false;
  bool tight = false;
  std::optional<SparsityWitness> witness;
};

inline constexpr std::size_t kMaxSparsityOrbits = 20;
inline constexpr std::size_t kMaxOracleEdges = 18;

/// Vertex-subset scan; witnesses are minimal by subset size, then by
/// lexicographic bitmask order. Throws SizeLimitExceeded above 20 orbits.
SparsityVerdict check_gain_sparse(const SignedQuotientGraph& q, SparsityVariant variant, bool loopless_required = false);

/// Literal check over every edge subset; validation oracle for the scan
/// above. Throws SizeLimitExceeded above 18 edges.
SparsityVerdict oracle_gain_sparse_edge_subsets(const SignedQuotientGraph& q, SparsityVariant variant,
                                                bool loopless_required = false);

/// Shorthand for the (2,2,1)-gain-tight test used by the construction moves.
bool is_gain_tight(const SignedQuotientGraph& q, bool loopless_required = false);

std::string to_string(SparsityVariant variant);
std::string to_string(SparsityWitness::Clause clause);

}  // namespace gridrig

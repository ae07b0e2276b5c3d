#include "gridrig/sparsity.hpp"

#include <bit>
#include <cstdint>

#include "gridrig/errors.hpp"
#include "gridrig/parity_union_find.hpp"

namespace gridrig {

namespace {

long general_bound(SparsityVariant variant, long vertices) {
  return variant == SparsityVariant::k221 ? 2 * vertices - 1 : 2 * vertices;
}

long balanced_bound(long vertices) { return 2 * vertices - 2; }

long tight_count(SparsityVariant variant, long orbits) { return general_bound(variant, orbits); }

std::vector<int> orbits_of_mask(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1u) out.push_back(v);
  }
  return out;
}

bool edges_balanced(const SignedQuotientGraph& q, const std::vector<std::size_t>& edges) {
  ParityUnionFind uf(q.orbit_count());
  for (auto i : edges) {
    const auto& e = q.edges()[i];
    if (e.is_loop() || !uf.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), e.gain)) return false;
  }
  return true;
}

std::optional<SparsityWitness> loop_witness(const SignedQuotientGraph& q) {
  for (std::size_t i = 0; i < q.edge_count(); ++i) {
    const auto& e = q.edges()[i];
    if (e.is_loop()) {
      SparsityWitness w;
      w.clause = SparsityWitness::Clause::kLoop;
      w.orbits = {e.u};
      w.edges = {i};
      w.edge_count = 1;
      w.bound = 0;
      return w;
    }
  }
  return std::nullopt;
}

// Largest balanced subset of `edges` (all inside the orbit set `members`):
// a balanced set is exactly the set of non-loop edges agreeing with some
// signing, so maximize agreement over signings with the first member fixed.
std::vector<std::size_t> max_balanced_subset(const SignedQuotientGraph& q, const std::vector<int>& members,
                                             const std::vector<std::size_t>& edges) {
  std::vector<int> position(q.orbit_count(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) position[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
  const std::size_t k = members.size();
  std::vector<std::size_t> best;
  const std::uint64_t limit = k == 0 ? 1 : (std::uint64_t{1} << (k - 1));
  for (std::uint64_t s = 0; s < limit; ++s) {
    // bit i of (s << 1) set means member i has sign -1; member 0 stays +1
    const std::uint64_t flips = s << 1;
    std::vector<std::size_t> agree;
    for (auto i : edges) {
      const auto& e = q.edges()[i];
      if (e.is_loop()) continue;
      const int su = (flips >> position[static_cast<std::size_t>(e.u)]) & 1u ? -1 : 1;
      const int sv = (flips >> position[static_cast<std::size_t>(e.v)]) & 1u ? -1 : 1;
      if (su * sv == e.gain) agree.push_back(i);
    }
    if (agree.size() > best.size()) best = std::move(agree);
  }
  return best;
}

}  // namespace

// Why induced edge sets suffice for (2,2,1): a violating F with V(F) = W sits
// inside E(W). If F breaks the general bound so does E(W). If F is balanced
// with |F| >= 2|W|-1 then either E(W) = F (balanced, same violation) or
// |E(W)| >= 2|W| (general violation). For (2,2,0) the second branch fails
// (2|W| edges are allowed), so that variant maximizes balanced subsets of E(W).
SparsityVerdict check_gain_sparse(const SignedQuotientGraph& q, SparsityVariant variant, bool loopless_required) {
  const std::size_t n = q.orbit_count();
  if (n > kMaxSparsityOrbits) {
    throw SizeLimitExceeded("sparsity scan refuses graphs with more than 20 orbits (got " + std::to_string(n) + ")");
  }
  SparsityVerdict verdict;
  if (loopless_required) {
    if (auto w = loop_witness(q)) {
      verdict.witness = std::move(w);
      return verdict;
    }
  }
  std::vector<std::uint64_t> edge_mask(q.edge_count());
  for (std::size_t i = 0; i < q.edge_count(); ++i) {
    edge_mask[i] = (std::uint64_t{1} << q.edges()[i].u) | (std::uint64_t{1} << q.edges()[i].v);
  }
  for (std::size_t size = 1; size <= n; ++size) {
    // Gosper's hack walks masks with `size` bits in increasing order.
    std::uint64_t mask = (std::uint64_t{1} << size) - 1;
    const std::uint64_t end = std::uint64_t{1} << n;
    while (mask < end) {
      std::vector<std::size_t> induced;
      for (std::size_t i = 0; i < edge_mask.size(); ++i) {
        if ((edge_mask[i] & ~mask) == 0) induced.push_back(i);
      }
      const long w = static_cast<long>(size);
      const long count = static_cast<long>(induced.size());
      std::optional<SparsityWitness> found;
      if (count > general_bound(variant, w)) {
        found = SparsityWitness{SparsityWitness::Clause::kAll, orbits_of_mask(mask), induced,
                                induced.size(), general_bound(variant, w)};
      } else if (count > balanced_bound(w)) {
        if (variant == SparsityVariant::k221) {
          if (edges_balanced(q, induced)) {
            found = SparsityWitness{SparsityWitness::Clause::kBalanced, orbits_of_mask(mask), induced,
                                    induced.size(), balanced_bound(w)};
          }
        } else {
          auto members = orbits_of_mask(mask);
          auto best = max_balanced_subset(q, members, induced);
          if (static_cast<long>(best.size()) > balanced_bound(w)) {
            const auto bsize = best.size();
            found = SparsityWitness{SparsityWitness::Clause::kBalanced, std::move(members), std::move(best), bsize,
                                    balanced_bound(w)};
          }
        }
      }
      if (found) {
        verdict.witness = std::move(found);
        return verdict;
      }
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  verdict.sparse = true;
  verdict.tight = static_cast<long>(q.edge_count()) == tight_count(variant, static_cast<long>(n));
  return verdict;
}

SparsityVerdict oracle_gain_sparse_edge_subsets(const SignedQuotientGraph& q, SparsityVariant variant,
                                                bool loopless_required) {
  const std::size_t m = q.edge_count();
  if (m > kMaxOracleEdges) {
    throw SizeLimitExceeded("edge-subset oracle refuses graphs with more than 18 edges (got " + std::to_string(m) + ")");
  }
  SparsityVerdict verdict;
  if (loopless_required) {
    if (auto w = loop_witness(q)) {
      verdict.witness = std::move(w);
      return verdict;
    }
  }
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << m); ++subset) {
    std::vector<std::size_t> edges;
    std::uint64_t touched = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if ((subset >> i) & 1u) {
        edges.push_back(i);
        touched |= (std::uint64_t{1} << q.edges()[i].u) | (std::uint64_t{1} << q.edges()[i].v);
      }
    }
    const long vertices = std::popcount(touched);
    const long count = static_cast<long>(edges.size());
    std::optional<SparsityWitness::Clause> clause;
    long bound = 0;
    if (count > general_bound(variant, vertices)) {
      clause = SparsityWitness::Clause::kAll;
      bound = general_bound(variant, vertices);
    } else if (count > balanced_bound(vertices) && edges_balanced(q, edges)) {
      clause = SparsityWitness::Clause::kBalanced;
      bound = balanced_bound(vertices);
    }
    if (clause) {
      verdict.witness = SparsityWitness{*clause, orbits_of_mask(touched), edges, edges.size(), bound};
      return verdict;
    }
  }
  verdict.sparse = true;
  verdict.tight = static_cast<long>(m) == tight_count(variant, static_cast<long>(q.orbit_count()));
  return verdict;
}

bool is_gain_tight(const SignedQuotientGraph& q, bool loopless_required) {
  if (static_cast<long>(q.edge_count()) != 2 * static_cast<long>(q.orbit_count()) - 1) return false;
  return check_gain_sparse(q, SparsityVariant::k221, loopless_required).tight;
}

std::string to_string(SparsityVariant variant) { return variant == SparsityVariant::k221 ? "221" : "220"; }

std::string to_string(SparsityWitness::Clause clause) {
  switch (clause) {
    case SparsityWitness::Clause::kAll:
      return "all";
    case SparsityWitness::Clause::kBalanced:
      return "balanced";
    case SparsityWitness::Clause::kLoop:
      return "loop";
  }
  return "all";
}

}  // namespace gridrig

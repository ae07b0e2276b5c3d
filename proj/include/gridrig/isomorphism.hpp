#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "gridrig/quotient.hpp"

namespace gridrig {

/// Orbit i of the source goes to orbit `perm[i]` of the target after the
/// source is switched by `signs`. Edge ids are ignored.
struct SwitchingIsomorphism {
  std::vector<int> perm;
  std::vector<int> signs;
};

std::optional<SwitchingIsomorphism> find_switching_isomorphism(const SignedQuotientGraph& a,
                                                               const SignedQuotientGraph& b);
bool switching_isomorphic(const SignedQuotientGraph& a, const SignedQuotientGraph& b);

/// Sorted (u, v, gain) triples with u <= v, minimal over every orbit
/// permutation and switching. Throws SizeLimitExceeded above 8 orbits.
using CanonicalForm = std::vector<std::array<int, 3>>;
inline constexpr std::size_t kMaxCanonicalOrbits = 8;
CanonicalForm canonical_form(const SignedQuotientGraph& q);

/// Graph with orbits "0".."n-1" and edges "e0".. built from a canonical form.
SignedQuotientGraph from_canonical(std::size_t orbits, const CanonicalForm& form);

}  // namespace gridrig

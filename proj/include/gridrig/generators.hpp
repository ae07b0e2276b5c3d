#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gridrig/characterize.hpp"
#include "gridrig/geometry.hpp"
#include "gridrig/moves.hpp"

namespace gridrig {

using Rng = std::mt19937_64;

/// Random valid signed quotient graph: 1..max_orbits orbits, up to
/// max_edges edges drawn from every admissible slot.
SignedQuotientGraph random_quotient(Rng& rng, std::size_t max_orbits, std::size_t max_edges, bool allow_loops = true);

/// Random tight graph grown from the mode's base by random forward moves,
/// with at most max_orbits orbits.
SignedQuotientGraph random_tight_graph(Rng& rng, std::size_t max_orbits, Mode mode);

/// One syntactically plausible move on q, unchecked: applying it may fail.
/// Throws InvalidInput when the drawn move type has nothing to act on.
Move random_move(Rng& rng, const SignedQuotientGraph& q, Mode mode);
/// Random one-move extension of q; nothing if no valid move was drawn.
std::optional<std::pair<Move, SignedQuotientGraph>> random_forward_move(Rng& rng, const SignedQuotientGraph& q,
                                                                        Mode mode, int tries = 64);

/// Integer representatives in [-grid, grid]^2, resampled until the framework
/// is well-positioned, has no degenerate bar and no joint on the mirror.
std::optional<SymmetricFramework> random_framework(Rng& rng, const SignedQuotientGraph& q, const QuadNorm& norm,
                                                   long grid = 6, int retries = 200);

/// Mixed corpus: random edge sets and random tight graphs, each placed at random.
SymmetricFramework random_corpus_framework(Rng& rng, std::size_t max_orbits, const QuadNorm& norm);

struct CrosscheckFailure {
  std::size_t index = 0;
  SymmetricFramework framework;
  std::vector<Disagreement> disagreements;
};

struct CrosscheckSummary {
  std::size_t cases = 0;
  std::size_t agreements = 0;
  std::size_t sym_isostatic = 0;
  std::size_t anti_isostatic = 0;
  std::size_t inf_rigid = 0;
  std::size_t isostatic = 0;
  std::vector<CrosscheckFailure> failures;
};

CrosscheckSummary run_crosscheck(std::size_t cases, std::size_t max_orbits, std::uint64_t seed,
                                 const QuadNorm& norm = QuadNorm::linf());

}  // namespace gridrig

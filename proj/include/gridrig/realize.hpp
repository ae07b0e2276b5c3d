#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gridrig/characterize.hpp"
#include "gridrig/geometry.hpp"
#include "gridrig/moves.hpp"
#include "gridrig/rigidity.hpp"

namespace gridrig {

struct RealizationResult {
  SymmetricFramework framework;
  CharacterizationReport certificate;
  RigidityReport report;
  int attempts = 0;
  int shrink_steps = 0;
};

inline constexpr int kShrinkBudget = 64;

/// Places the covering graph of replay(seq) move by move. The framework uses
/// `norm`; positions are built in normalized coordinates and mapped back.
/// Throws Exhausted if some move cannot be placed within the shrink budget.
RealizationResult realize(const ConstructionSequence& seq, const QuadNorm& norm, std::uint64_t seed = 0);

/// Representative positions (normalized coordinates) of the frozen
/// anti-isostatic 2K3-[e] placement, for the graph ab+, ab-, cb+, cb-, ca+.
SignedQuotientGraph frozen_two_k3_graph();
std::vector<Vec2> frozen_two_k3_placement();

enum class RandomTarget { kSym, kAnti, kRigid };
std::string to_string(RandomTarget t);

/// Samples integer representative coordinates from a grid that widens with
/// the attempt index and returns the first placement whose rank report meets
/// the target. Throws Exhausted after `attempts` tries.
RealizationResult random_realize(const SignedQuotientGraph& q, const QuadNorm& norm, RandomTarget target,
                                 std::uint64_t seed, int attempts);

}  // namespace gridrig

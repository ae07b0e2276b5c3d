#pragma once

#include <cstdint>
#include <string>

#include "gridrig/characterize.hpp"
#include "gridrig/geometry.hpp"
#include "gridrig/io.hpp"
#include "gridrig/moves.hpp"
#include "gridrig/sparsity.hpp"

// JSON document in, JSON document out. Shared by the command-line tool and
// the Python module so both produce the same bytes.
namespace gridrig::service {

using io::Json;

/// "linf", "l1", or a path to a norm JSON file.
QuadNorm norm_from_spec(const std::string& spec);

/// Accepts a bare quotient or an object with a "quotient" member.
SignedQuotientGraph quotient_of(const Json& doc);

Json disagreements_json(const std::vector<Disagreement>& ds);

Json analyze(const Json& framework_doc, bool lifted_flexes);
Json sparsity(const Json& quotient_doc, SparsityVariant variant, bool loopless);
Json construct(const Json& quotient_doc, Mode mode);
/// `doc` is a quotient (extracted first) or a construction sequence. A
/// quotient without a construction sequence is placed by random sampling.
Json realize(const Json& doc, Mode mode, const QuadNorm& norm, std::uint64_t seed);
/// Summary plus the number of disagreeing cases.
std::pair<Json, std::size_t> crosscheck(std::size_t cases, std::size_t max_orbits, std::uint64_t seed,
                                        const QuadNorm& norm);

}  // namespace gridrig::service

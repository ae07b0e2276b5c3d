#pragma once

#include <string>

#include <json.hpp>

#include "gridrig/characterize.hpp"
#include "gridrig/generators.hpp"
#include "gridrig/geometry.hpp"
#include "gridrig/moves.hpp"
#include "gridrig/quotient.hpp"
#include "gridrig/rigidity.hpp"
#include "gridrig/sparsity.hpp"

namespace gridrig::io {

using Json = nlohmann::json;

// Readers take the JSON pointer of the value they parse so that every
// SchemaError names the offending field. Graph invariants (a loop with gain
// +1, equal-gain parallels) are domain errors and surface as InvalidInput.

Rational rational_from_json(const Json& j, const std::string& ptr);
Json to_json(const Rational& r);
Vec2 vec_from_json(const Json& j, const std::string& ptr);
Json to_json(const Vec2& v);

SignedQuotientGraph quotient_from_json(const Json& j, const std::string& ptr = "");
Json to_json(const SignedQuotientGraph& q);

/// "linf", "l1", or {"F1":[..], "F2":[..]}.
QuadNorm norm_from_json(const Json& j, const std::string& ptr);
Json to_json(const QuadNorm& n);

/// {"norm":..., "quotient":..., "reps":{orbit:[x,y]}}
SymmetricFramework framework_from_json(const Json& j, const std::string& ptr = "");
Json to_json(const SymmetricFramework& f);

Json to_json(const SparsityVerdict& v, const SignedQuotientGraph& q);
Json to_json(const RigidityReport& r);
Json to_json(const CharacterizationReport& c, const SignedQuotientGraph& q);

Move move_from_json(const Json& j, const std::string& ptr);
Json to_json(const Move& m);
ConstructionSequence sequence_from_json(const Json& j, const std::string& ptr = "");
Json to_json(const ConstructionSequence& s);

Json to_json(const CrosscheckSummary& s);

Mode mode_from_string(const std::string& text);
SparsityVariant variant_from_string(const std::string& text);

/// Parses text, mapping syntax errors to SchemaError at the root.
Json parse(const std::string& text);
Json read_file(const std::string& path);
/// Pretty JSON with sorted keys and a trailing newline.
std::string dump(const Json& j);

}  // namespace gridrig::io

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "narrow2/additive.hpp"
#include "narrow2/maximality.hpp"
#include "narrow2/rayclass.hpp"
#include "narrow2/redei.hpp"
#include "narrow2/search.hpp"
#include "narrow2/ternary.hpp"
#include "narrow2/units.hpp"

// JSON views of the library types. Objects use nlohmann::json's default
// std::map storage, so keys always come out sorted. Arbitrary-precision
// integers are written as decimal strings.
namespace narrow2 {

using Json = nlohmann::json;

Json to_json(const TernarySolution& s);
Json to_json(const RedeiContext& ctx);
Json to_json(const QuadraticUnit& u);
Json to_json(const Condition& c);
Json to_json(const AcceptableVector& v);
Json to_json(const MaximalityReport& r);
Json to_json(const UnitReductionReport& r);
Json to_json(const RayPrediction& p);
Json to_json(const RedeiSpace& s);
Json to_json(const EnumerationResult& r);
Json to_json(const RayClassSearchResult& r);
Json to_json(const ValidationResult& r);
Json to_json(const ShrinkingResult& r);
Json to_json(const EquivalenceResult& r);

// Additive systems: {"c_empty_default", "d", "ground_sets", "subsets"} where
// "subsets" lists {"subset", "dim", "f", "c"} in (size, lex) order with
// 1-based coordinates. See docs/formats.md.
Json additive_to_json(const AdditiveSystem& s);

// Throws FormatError naming the offending JSON path. Missing "c" arrays are
// filled in: C_empty by the full set, the others by closure.
AdditiveSystem additive_from_json(const Json& j);

// Two-space indented dump followed by a newline.
std::string dump(const Json& j);

}  // namespace narrow2

#pragma once

#include <json.hpp>

#include "latmorph/constructors.hpp"
#include "latmorph/granulometry.hpp"
#include "latmorph/image.hpp"
#include "latmorph/inclusion.hpp"
#include "latmorph/oracle.hpp"

namespace latmorph {

using Json = nlohmann::ordered_json;

Json to_json(const Point& p);
Json to_json(const PointSet& s);
Point point_from_json(const Json& j);
/// Array of integer arrays; an empty array needs `dimension`.
PointSet point_set_from_json(const Json& j, std::size_t dimension = 0);

/// {domain, values, zero_set}
Json to_json(const Image& g);

std::string sign_name(Sign s);
std::string relation_name(Relation r);

/// {verdict, mode, witness, counterexample, translates, stats}. Whole-space
/// witness entries are [b2, b1]; restricted entries are [sign, x, b2, b1].
Json to_json(const InclusionReport& r);

Json to_json(const PropertyVerdict& v);
Json to_json(const EquivalenceResult& r);
Json to_json(const ImplicationMatrix& m);
Json to_json(const GranulometryResult& r);

/// {kind, params} where params depend on kind:
///   translate-union   {base: point set, steps: [[vector, ...], ...]}
///   rectangle-chain   {rectangles: [{lo, hi}, ...]}
///   square-iteration  {n}
///   l1-chain          {omega_max, dimension}
SequenceRecipe recipe_from_json(const Json& j);
Json to_json(const SequenceRecipe& r);

Json sequence_to_json(std::span<const StructuringElement> seq);

}  // namespace latmorph

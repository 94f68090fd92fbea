#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cjs/examples.hpp"
#include "cjs/formula.hpp"
#include "cjs/representation.hpp"
#include "cjs/structure.hpp"

namespace cjs {

using Json = nlohmann::ordered_json;

/// { "elements", "zero", "one", "join": [[a,b,a+b]...], "contact": [[a,b]...] }
/// Join entries cover i < j only (idempotent and symmetric entries are
/// derivable); contact pairs are unordered with the diagonal included.
Json structure_to_json(const FiniteJoinStructure& s);

/// Parses the same format; throws StructureError naming the offending field
/// on shape errors, and propagates validation failures.
StructureDescription description_from_json(const Json& j);
FiniteJoinStructure structure_from_json(const Json& j);

/// { "points": [...], "opens": [[point...]...] }
FiniteTopology topology_from_json(const Json& j);
Json topology_to_json(const FiniteTopology& t);

/// { "points": [[element...]...], "relation": [[i,j]...]?, "map": {element: [i...]} }
Json embedding_to_json(const FiniteJoinStructure& s, const Embedding& e);

Json valuation_to_json(const FiniteJoinStructure& s, const Valuation& v);

/// Carrier subsets (clans, points, ideals) as sorted element-name lists.
Json masks_to_json(const FiniteJoinStructure& s, const std::vector<Mask>& masks);

}  // namespace cjs

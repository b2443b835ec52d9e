#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "wtrees/avsystem.hpp"
#include "wtrees/counting.hpp"
#include "wtrees/enumerate.hpp"
#include "wtrees/tree.hpp"

namespace wtrees {

using Json = nlohmann::ordered_json;  // keeps field order stable

// {"vertices":[{"id","color","weight"}], "edges":[{"id","u","v","weight"}],
//  "rotation":{"<vertexId>":[edge ids ccw]}}; weights as "p" / "p/q" strings.
Json tree_to_json(const PlaneTree& tree);
PlaneTree tree_from_json(const Json& doc);  // accepts arbitrary unique ids

// Graphviz: white vertices as unfilled circles, black as filled, edge labels
// carrying the edge weights.
std::string tree_to_dot(const PlaneTree& tree, const std::string& name = "wtree");

Json census_to_json(const SymmetryCensus& census);  // {"total":..,"byOrder":{..}}

std::string partition_text(const LabeledType& type, const TypePartition& part);
Json partition_to_json(const LabeledType& type, const TypePartition& part);

Json system_to_json(const AVSystem& system);
Json solutions_to_json(const std::vector<Solution>& sols);

}  // namespace wtrees

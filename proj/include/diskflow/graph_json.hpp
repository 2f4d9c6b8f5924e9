#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "diskflow/model.hpp"

namespace diskflow {

/// Graph interchange document:
///   { "separatrices": n,
///     "vertices": [ { "id", "parent", "children", "color", "prime" }, ... ] }
/// with ids in level order, `parent` and `color` null for the root.
nlohmann::json graph_to_json(const DistinguishedGraph& g);

/// Throws ModelError on schema or invariant violations.
DistinguishedGraph graph_from_json(const nlohmann::json& doc);

}  // namespace diskflow

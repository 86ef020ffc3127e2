#pragma once

#include <json.hpp>

#include "treecycles/arnold.hpp"
#include "treecycles/decomposition.hpp"
#include "treecycles/rewrite.hpp"
#include "treecycles/tree.hpp"

namespace treecycles {

// {"g": int, "newick": string, "nodes": [[int, ...], ...]}, nodes in canonical order.
nlohmann::json tree_to_json(const Tree& t);
// Accepts the form above; "nodes" is optional but must match "newick" when present.
Tree tree_from_json(const nlohmann::json& j);

// {"g": int, "basis": "balanced-construction", "terms": [{"k": [...], "coeff": int}, ...]}
nlohmann::json decomposition_to_json(const CycleDecomposition& d);
CycleDecomposition decomposition_from_json(const nlohmann::json& j);

// {"g": int, "terms": [{"tree": newick, "coeff": int}, ...]} sorted by tree string.
nlohmann::json signed_sum_to_json(const SignedTreeSum& s);

// {"at": int, "triple": [newick, newick, newick]}
nlohmann::json rotation_to_json(const RotationStep& step);

// {"n": int, "terms": [{"monomial": string, "coeff": int}, ...], "text": string}
// Coefficients beyond 64 bits are written as decimal strings.
nlohmann::json class_to_json(const CohomologyClass& c);

}  // namespace treecycles

#pragma once

#include <json.hpp>

#include "bdris/architecture.hpp"
#include "bdris/graph.hpp"
#include "bdris/network.hpp"
#include "bdris/optimize.hpp"

namespace bdris {

using Json = nlohmann::json;

// {"n": int, "edges": [[a, b], ...]}
Json to_json(const RisGraph& g);
RisGraph graph_from_json(const Json& j);

// {"kind": str, "n": int, "group_size": int|null, "inner": str|null, "edges": [...]}
Json to_json(const Architecture& arch);
Architecture architecture_from_json(const Json& j);

// Row-major nested arrays of [re, im] pairs: [[[re, im], ...], ...].
Json matrix_to_json(const ComplexMatrix& m);
Json matrix_to_json(const RealMatrix& m);
ComplexMatrix complex_matrix_from_json(const Json& j);
RealMatrix real_matrix_from_json(const Json& j);

// Vectors as flat arrays of [re, im] pairs.
Json vector_to_json(const ComplexVector& v);
ComplexVector complex_vector_from_json(const Json& j);

// {"architecture", "B", "Theta", "w", "power_w", "bound_w",
//  "power_bound_ratio", "iterations", "objective_history"}
Json to_json(const OptimizationResult& r);

}  // namespace bdris

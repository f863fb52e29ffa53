#pragma once

#include <string>

#include <json.hpp>

#include "hopfhg/hypergraph.hpp"
#include "hopfhg/orientation.hpp"
#include "hopfhg/polynomial.hpp"
#include "hopfhg/submonoids.hpp"

namespace hopfhg {

using Json = nlohmann::json;

/// Parses JSON text; throws InvalidInput with the parser's message.
Json parse_json_text(const std::string& text);

// Labels may be given as strings or as nonnegative integers; both become
// strings. All parse errors are InvalidInput naming the offending path,
// e.g. "edges[2][0]: unknown vertex 'x'".

/// {"vertices": [...], "edges": [[...], ...]}
Hypergraph hypergraph_from_json(const Json& j);
/// Canonical form: sorted vertices, sorted edges, edges ordered by
/// (size, labels).
Json to_json(const Hypergraph& h);

/// {"vertices": [...], "edges": [[u, v], ...]}
SimpleGraph graph_from_json(const Json& j);
Json to_json(const SimpleGraph& g);

/// {"vertices": [...], "faces": [[...], ...]}
SimplicialComplex complex_from_json(const Json& j);
Json to_json(const SimplicialComplex& c);

/// {"vertices": [...], "sets": [[...], ...]}
BuildingSet building_set_from_json(const Json& j);
Json to_json(const BuildingSet& b);

/// {"vertices": [...], "parts": [[...], ...]}
SetPartition partition_from_json(const Json& j);
Json to_json(const SetPartition& pi);

/// {"paths": [[...], ...]} with optional "vertices"; each path is ordered.
PathFamily path_family_from_json(const Json& j);
Json to_json(const PathFamily& alpha);

/// Coefficients as fraction strings, ascending degree; zero is [].
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

Json to_json(const RootedForest& f);
/// Head label per edge, in edge order of h.
Json orientation_to_json(const Hypergraph& h, const Orientation& f);
/// [{"coefficient": "-1", "hypergraph": {...}}, ...] in term order.
Json to_json(const FormalSum& f);

/// Which schema an object matches, by its distinguishing key: "edges",
/// "faces", "sets", "parts" or "paths". Throws when none or several match.
std::string object_kind(const Json& j);

}  // namespace hopfhg

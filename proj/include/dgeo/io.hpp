#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "dgeo/function.hpp"
#include "dgeo/graph.hpp"
#include "dgeo/hypersurface.hpp"

namespace dgeo {

// Graph wire format: {"n": <int>, "edges": [[u,v], ...]}, 0-based ids.
nlohmann::json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const nlohmann::json& j);

SimpleGraph read_graph_file(const std::string& path);
void write_graph_file(const SimpleGraph& g, const std::string& path);

// Function file: JSON object mapping vertex id to value; values may be
// integers or "p/q" strings.
VertexFunction function_from_json(const nlohmann::json& j, int n);
VertexFunction read_function_file(const std::string& path, int n);

Rational rational_from_json(const nlohmann::json& j);

std::string graph_to_dot(const SimpleGraph& g);

// Hypersurface JSON adds a "provenance" array; in DOT, mixed-edge vertices
// are round and completion centers square.
nlohmann::json hypersurface_to_json(const HypersurfaceGraph& h);
std::string hypersurface_to_dot(const HypersurfaceGraph& h);

}  // namespace dgeo

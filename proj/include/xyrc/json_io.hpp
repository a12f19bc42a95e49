#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "xyrc/current.hpp"
#include "xyrc/graph.hpp"
#include "xyrc/rational.hpp"

namespace xyrc {

/// Malformed input text (bad JSON, wrong shape, unreadable file).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"vertices": [ids], "edges": [{"u": int, "v": int, "J": "p/q"}]}.
/// Shape problems throw InputError; graph invariants throw ValidationError.
Graph graph_from_json(const nlohmann::json& doc);
nlohmann::json graph_to_json(const Graph& graph);
Graph read_graph_file(const std::filesystem::path& path);

/// {"vertex-id": int}; absent vertices are 0.
SourceFunction source_from_json(const nlohmann::json& doc, std::size_t num_vertices);
SourceFunction parse_source(std::string_view json_text, std::size_t num_vertices);
nlohmann::json source_to_json(const SourceFunction& f);

/// {"u->v": int}; absent oriented edges are 0.
Current current_from_json(const nlohmann::json& doc, const Graph& graph);
nlohmann::json current_to_json(const Current& n, const Graph& graph);

nlohmann::json amplitude_to_json(const EdgeAmplitude& amplitude);

}  // namespace xyrc

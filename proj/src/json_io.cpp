#include "xyrc/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace xyrc {

using nlohmann::json;

namespace {

VertexId vertex_id(const json& value, std::string_view what) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
    throw InputError(std::string(what) + " must be a nonnegative integer");
  return static_cast<VertexId>(value.get<std::int64_t>());
}

VertexId parse_vertex_key(std::string_view key) {
  VertexId id = 0;
  const auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), id);
  if (ec != std::errc() || end != key.data() + key.size() || key.empty())
    throw InputError("invalid vertex id '" + std::string(key) + "'");
  return id;
}

}  // namespace

Graph graph_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw InputError("graph must be an object with \"vertices\" and \"edges\"");
  if (!doc["vertices"].is_array() || !doc["edges"].is_array())
    throw InputError("\"vertices\" and \"edges\" must be arrays");
  GraphSpec spec;
  for (const auto& v : doc["vertices"]) spec.vertices.push_back(vertex_id(v, "vertex id"));
  for (const auto& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("u") || !e.contains("v") || !e.contains("J"))
      throw InputError("each edge needs \"u\", \"v\" and \"J\"");
    Rational coupling;
    try {
      if (e["J"].is_string())
        coupling = parse_rational(e["J"].get<std::string>());
      else if (e["J"].is_number_integer())
        coupling = Rational(e["J"].get<std::int64_t>());
      else
        throw InputError("coupling \"J\" must be a \"p/q\" string or an integer");
    } catch (const std::invalid_argument& ex) {
      throw InputError(ex.what());
    }
    spec.edges.push_back({vertex_id(e["u"], "edge endpoint"), vertex_id(e["v"], "edge endpoint"), coupling});
  }
  return build_graph(spec);
}

json graph_to_json(const Graph& graph) {
  json doc;
  doc["vertices"] = json::array();
  for (VertexId x = 0; x < graph.num_vertices(); ++x) doc["vertices"].push_back(x);
  doc["edges"] = json::array();
  for (const Edge& e : graph.edges())
    doc["edges"].push_back({{"u", e.tail}, {"v", e.head}, {"J", format_rational(e.coupling)}});
  return doc;
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& ex) {
    throw InputError("malformed JSON in '" + path.string() + "': " + ex.what());
  }
  return graph_from_json(doc);
}

SourceFunction source_from_json(const json& doc, std::size_t num_vertices) {
  if (!doc.is_object()) throw InputError("source function must be a JSON object {\"vertex\": int}");
  SourceFunction f(num_vertices);
  for (const auto& [key, value] : doc.items()) {
    const VertexId x = parse_vertex_key(key);
    if (x >= num_vertices) throw InputError("source function names unknown vertex " + key);
    if (!value.is_number_integer()) throw InputError("source value for vertex " + key + " must be an integer");
    f[x] = value.get<std::int64_t>();
  }
  return f;
}

SourceFunction parse_source(std::string_view json_text, std::size_t num_vertices) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& ex) {
    throw InputError(std::string("malformed source function JSON: ") + ex.what());
  }
  return source_from_json(doc, num_vertices);
}

json source_to_json(const SourceFunction& f) {
  json doc = json::object();
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[x] != 0) doc[std::to_string(x)] = f[x];
  return doc;
}

Current current_from_json(const json& doc, const Graph& graph) {
  if (!doc.is_object()) throw InputError("current must be a JSON object {\"u->v\": int}");
  Current n(graph);
  for (const auto& [key, value] : doc.items()) {
    const auto arrow = key.find("->");
    if (arrow == std::string::npos) throw InputError("current key '" + key + "' is not of the form u->v");
    const VertexId u = parse_vertex_key(std::string_view(key).substr(0, arrow));
    const VertexId v = parse_vertex_key(std::string_view(key).substr(arrow + 2));
    if (graph.find_edge(u, v) == graph.num_edges()) throw InputError("current key '" + key + "' is not an edge");
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
      throw InputError("current value for '" + key + "' must be a nonnegative integer");
    n.set(graph, u, v, value.get<std::uint64_t>());
  }
  return n;
}

json current_to_json(const Current& n, const Graph& graph) {
  json doc = json::object();
  for (const OrientedEdge& oe : oriented_edges(graph)) {
    const std::uint64_t value = oe.forward() ? n.forward(oe.base) : n.backward(oe.base);
    if (value != 0) doc[std::to_string(oe.tail) + "->" + std::to_string(oe.head)] = value;
  }
  return doc;
}

json amplitude_to_json(const EdgeAmplitude& amplitude) {
  json out = json::array();
  for (std::uint64_t v : amplitude.values()) out.push_back(v);
  return out;
}

}  // namespace xyrc

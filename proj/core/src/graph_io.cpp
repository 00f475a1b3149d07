#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gralg/error.hpp"
#include "gralg/graph.hpp"

namespace gralg {

namespace {

void reject_unknown_fields(const nlohmann::json& object, std::initializer_list<std::string_view> allowed,
                           std::string_view where) {
  if (!object.is_object()) throw Error("graph JSON: " + std::string(where) + " must be an object");
  for (const auto& [name, value] : object.items()) {
    bool known = false;
    for (auto a : allowed) known = known || name == a;
    if (!known) throw Error("graph JSON: unknown field '" + name + "' in " + std::string(where));
  }
  for (auto a : allowed) {
    if (!object.contains(std::string(a))) {
      throw Error("graph JSON: missing field '" + std::string(a) + "' in " + std::string(where));
    }
  }
}

}  // namespace

LayeredGraph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("graph JSON: ") + e.what());
  }
  reject_unknown_fields(doc, {"vertices", "edges"}, "top level");
  if (!doc["vertices"].is_array() || !doc["edges"].is_array()) {
    throw Error("graph JSON: 'vertices' and 'edges' must be arrays");
  }

  std::vector<Vertex> vertices;
  for (const auto& v : doc["vertices"]) {
    reject_unknown_fields(v, {"id", "level"}, "vertex");
    if (!v["id"].is_string()) throw Error("graph JSON: vertex id must be a string");
    if (!v["level"].is_number_integer()) throw Error("graph JSON: vertex level must be an integer");
    vertices.push_back({v["id"].get<std::string>(), v["level"].get<int>()});
  }
  int level_zero = 0;
  for (const auto& v : vertices) level_zero += v.level == 0 ? 1 : 0;
  if (level_zero != 1) {
    throw Error("graph JSON: expected exactly one level-0 vertex, found " + std::to_string(level_zero));
  }

  std::vector<EdgeByKey> edges;
  for (const auto& e : doc["edges"]) {
    reject_unknown_fields(e, {"tail", "head"}, "edge");
    if (!e["tail"].is_string() || !e["head"].is_string()) throw Error("graph JSON: edge endpoints must be strings");
    edges.push_back({e["tail"].get<std::string>(), e["head"].get<std::string>()});
  }
  return LayeredGraph::from_parts(std::move(vertices), edges);
}

LayeredGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_json(buffer.str());
}

std::string write_graph_json(const LayeredGraph& graph) {
  nlohmann::ordered_json doc;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : graph.vertices()) {
    nlohmann::ordered_json item;
    item["id"] = v.key;
    item["level"] = v.level;
    doc["vertices"].push_back(std::move(item));
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : graph.edges()) {
    nlohmann::ordered_json item;
    item["tail"] = graph.key(e.tail);
    item["head"] = graph.key(e.head);
    doc["edges"].push_back(std::move(item));
  }
  return doc.dump();
}

}  // namespace gralg

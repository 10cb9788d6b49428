#include "gwp/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gwp/error.hpp"

namespace gwp {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw ParseError("graph schema error at " + where + ": " + what, 0);
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing \"") + key + "\"");
  if (!it->is_string()) schema_error(where + "/" + key, "expected a string");
  return it->get<std::string>();
}

}  // namespace

Graph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) schema_error("/", "expected an object");

  auto vit = doc.find("vertices");
  if (vit == doc.end()) schema_error("/", "missing \"vertices\"");
  if (!vit->is_array()) schema_error("/vertices", "expected an array");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vit->size(); ++i) {
    const auto& v = (*vit)[i];
    if (!v.is_string()) schema_error("/vertices/" + std::to_string(i), "expected a string");
    vertices.push_back(v.get<std::string>());
  }

  std::vector<EdgeSpec> edges;
  auto eit = doc.find("edges");
  if (eit == doc.end()) schema_error("/", "missing \"edges\"");
  if (!eit->is_array()) schema_error("/edges", "expected an array");
  for (std::size_t i = 0; i < eit->size(); ++i) {
    const auto& e = (*eit)[i];
    std::string where = "/edges/" + std::to_string(i);
    if (!e.is_object()) schema_error(where, "expected an object");
    edges.push_back({string_field(e, "id", where), string_field(e, "src", where),
                     string_field(e, "dst", where)});
  }

  try {
    return build_graph(vertices, edges);
  } catch (const GraphError& e) {
    throw GraphError(std::string("invalid graph: ") + e.what());
  }
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read graph file '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.position());
  } catch (const GraphError& e) {
    throw GraphError(path + ": " + e.what());
  }
}

std::string graph_to_json(const Graph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (VertexId v : g.vertices()) doc["vertices"].push_back(g.vertex_name(v));
  doc["edges"] = json::array();
  for (EdgeId e : g.edges()) {
    doc["edges"].push_back({{"id", g.edge_name(e)},
                            {"src", g.vertex_name(g.source(e))},
                            {"dst", g.vertex_name(g.range(e))}});
  }
  return doc.dump(2);
}

}  // namespace gwp

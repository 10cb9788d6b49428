#pragma once

#include <string>
#include <string_view>

#include "gwp/graph.hpp"

namespace gwp {

/// Reads a graph document:
///   {"vertices": ["v", ...], "edges": [{"id": "a", "src": "v", "dst": "v"}, ...]}
/// Errors name the offending JSON location.
Graph parse_graph_json(std::string_view text);
Graph parse_graph_file(const std::string& path);

/// Serializes a graph in the same schema (ids in index order).
std::string graph_to_json(const Graph& g);

}  // namespace gwp

#include "gwp/graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

#include "gwp/error.hpp"

namespace gwp {

struct Graph::Data {
  struct EdgeRecord {
    std::string name;
    VertexId source;
    VertexId range;
  };

  std::vector<std::string> vertex_names;
  std::vector<EdgeRecord> edge_records;
  std::unordered_map<std::string, std::uint32_t> vertex_index;
  std::unordered_map<std::string, std::uint32_t> edge_index;
};

std::strong_ordering operator<=>(const PathWord& a, const PathWord& b) {
  if (auto c = a.edges_.size() <=> b.edges_.size(); c != 0) return c;
  if (a.edges_.empty()) return a.source_ <=> b.source_;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    if (auto c = a.edges_[i] <=> b.edges_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::optional<PathWord> concat(const PathWord& w1, const PathWord& w2) {
  if (w1.range_ != w2.source_) return std::nullopt;
  if (w1.is_unit()) return w2;
  if (w2.is_unit()) return w1;
  std::vector<EdgeId> edges;
  edges.reserve(w1.edges_.size() + w2.edges_.size());
  edges.insert(edges.end(), w1.edges_.begin(), w1.edges_.end());
  edges.insert(edges.end(), w2.edges_.begin(), w2.edges_.end());
  return PathWord(w1.source_, w2.range_, std::move(edges));
}

std::optional<PathWord> strip_prefix(const PathWord& prefix, const PathWord& word) {
  if (prefix.source_ != word.source_) return std::nullopt;
  if (prefix.is_unit()) return word;
  if (prefix.edges_.size() > word.edges_.size()) return std::nullopt;
  if (!std::equal(prefix.edges_.begin(), prefix.edges_.end(), word.edges_.begin())) {
    return std::nullopt;
  }
  if (prefix.edges_.size() == word.edges_.size()) return PathWord::unit(word.range_);
  return PathWord(prefix.range_, word.range_,
                  std::vector<EdgeId>(word.edges_.begin() + prefix.edges_.size(), word.edges_.end()));
}

std::pair<VertexId, VertexId> endpoints(const PathWord& w) { return {w.source(), w.range()}; }

Diagram diagram(const PathWord& w) {
  Diagram d;
  if (w.is_unit()) {
    d.base = w.source();
    return d;
  }
  d.edges.assign(w.edges().begin(), w.edges().end());
  std::sort(d.edges.begin(), d.edges.end());
  d.edges.erase(std::unique(d.edges.begin(), d.edges.end()), d.edges.end());
  return d;
}

bool diagram_distinct(const PathWord& w1, const PathWord& w2) { return diagram(w1) != diagram(w2); }

Graph build_graph(const std::vector<std::string>& vertices, const std::vector<EdgeSpec>& edges) {
  auto data = std::make_shared<Graph::Data>();

  std::set<std::string> vertex_set;
  for (const auto& v : vertices) {
    if (v.empty()) throw GraphError("empty vertex id");
    if (!vertex_set.insert(v).second) throw GraphError("duplicate vertex id '" + v + "'");
  }
  std::map<std::string, const EdgeSpec*> edge_map;
  for (const auto& e : edges) {
    if (e.id.empty()) throw GraphError("empty edge id");
    if (vertex_set.count(e.id)) {
      throw GraphError("id '" + e.id + "' used both as a vertex and as an edge");
    }
    if (!edge_map.emplace(e.id, &e).second) throw GraphError("duplicate edge id '" + e.id + "'");
    if (!vertex_set.count(e.source)) {
      throw GraphError("edge '" + e.id + "' has dangling source '" + e.source + "'");
    }
    if (!vertex_set.count(e.range)) {
      throw GraphError("edge '" + e.id + "' has dangling range '" + e.range + "'");
    }
  }

  data->vertex_names.assign(vertex_set.begin(), vertex_set.end());
  for (std::uint32_t i = 0; i < data->vertex_names.size(); ++i) {
    data->vertex_index.emplace(data->vertex_names[i], i);
  }
  for (const auto& [name, spec] : edge_map) {
    auto index = static_cast<std::uint32_t>(data->edge_records.size());
    data->edge_records.push_back({name, VertexId{data->vertex_index.at(spec->source)},
                                  VertexId{data->vertex_index.at(spec->range)}});
    data->edge_index.emplace(name, index);
  }
  return Graph(std::move(data));
}

std::size_t Graph::vertex_count() const noexcept { return data_->vertex_names.size(); }

std::size_t Graph::edge_count() const noexcept { return data_->edge_records.size(); }

const std::string& Graph::vertex_name(VertexId v) const {
  if (v.index >= data_->vertex_names.size()) throw ForeignIdError("vertex index out of range");
  return data_->vertex_names[v.index];
}

const std::string& Graph::edge_name(EdgeId e) const {
  if (e.index >= data_->edge_records.size()) throw ForeignIdError("edge index out of range");
  return data_->edge_records[e.index].name;
}

VertexId Graph::source(EdgeId e) const {
  if (e.index >= data_->edge_records.size()) throw ForeignIdError("edge index out of range");
  return data_->edge_records[e.index].source;
}

VertexId Graph::range(EdgeId e) const {
  if (e.index >= data_->edge_records.size()) throw ForeignIdError("edge index out of range");
  return data_->edge_records[e.index].range;
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = data_->vertex_index.find(std::string(name));
  if (it == data_->vertex_index.end()) return std::nullopt;
  return VertexId{it->second};
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  auto it = data_->edge_index.find(std::string(name));
  if (it == data_->edge_index.end()) return std::nullopt;
  return EdgeId{it->second};
}

VertexId Graph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw ForeignIdError("unknown vertex '" + std::string(name) + "'");
}

EdgeId Graph::edge(std::string_view name) const {
  if (auto e = find_edge(name)) return *e;
  throw ForeignIdError("unknown edge '" + std::string(name) + "'");
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out(vertex_count());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = VertexId{i};
  return out;
}

std::vector<EdgeId> Graph::edges() const {
  std::vector<EdgeId> out(edge_count());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = EdgeId{i};
  return out;
}

PathWord Graph::unit(VertexId v) const {
  if (v.index >= vertex_count()) throw ForeignIdError("vertex index out of range");
  return PathWord::unit(v);
}

PathWord Graph::path(std::span<const EdgeId> edges) const {
  if (edges.empty()) throw DomainError("edge path must be nonempty");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].index >= edge_count()) throw ForeignIdError("edge index out of range");
    if (i > 0 && range(edges[i - 1]) != source(edges[i])) {
      throw DomainError("path " + edge_name(edges[i - 1]) + "," + edge_name(edges[i]) +
                        " is not admissible");
    }
  }
  return PathWord(source(edges.front()), range(edges.back()),
                  std::vector<EdgeId>(edges.begin(), edges.end()));
}

PathWord Graph::path(std::initializer_list<std::string_view> edge_names) const {
  std::vector<EdgeId> ids;
  for (auto name : edge_names) ids.push_back(edge(name));
  return path(ids);
}

PathWord Graph::path(const std::vector<std::string>& edge_names) const {
  std::vector<EdgeId> ids;
  for (const auto& name : edge_names) ids.push_back(edge(name));
  return path(ids);
}

PathWord Graph::parse_word(std::string_view text) const {
  if (text.find(',') == std::string_view::npos) {
    if (auto v = find_vertex(text)) return unit(*v);
    if (auto e = find_edge(text)) return path(std::span<const EdgeId>(&*e, 1));
    throw ForeignIdError("unknown id '" + std::string(text) + "'");
  }
  std::vector<EdgeId> ids;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    ids.push_back(edge(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return path(ids);
}

bool Graph::contains(const PathWord& w) const {
  if (w.is_unit()) return w.source().index < vertex_count();
  for (std::size_t i = 0; i < w.length(); ++i) {
    EdgeId e = w.edges()[i];
    if (e.index >= edge_count()) return false;
    if (i > 0 && range(w.edges()[i - 1]) != source(e)) return false;
  }
  return source(w.edges().front()) == w.source() && range(w.edges().back()) == w.range();
}

void Graph::require(const PathWord& w) const {
  if (!contains(w)) throw ForeignIdError("word does not belong to this graph");
}

std::string Graph::word_name(const PathWord& w) const {
  if (w.is_unit()) return vertex_name(w.source());
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out += ',';
    out += edge_name(w.edges()[i]);
  }
  return out;
}

std::optional<PathWord> concat(const Graph& g, const PathWord& w1, const PathWord& w2) {
  g.require(w1);
  g.require(w2);
  return concat(w1, w2);
}

std::vector<PathWord> enumerate_paths(const Graph& g, std::size_t max_len) {
  std::vector<PathWord> out;
  for (VertexId v : g.vertices()) out.push_back(PathWord::unit(v));
  if (max_len == 0) return out;

  std::vector<std::vector<EdgeId>> out_edges(g.vertex_count());
  for (EdgeId e : g.edges()) out_edges[g.source(e).index].push_back(e);

  std::size_t level_begin = out.size();
  for (EdgeId e : g.edges()) out.push_back(g.path(std::span<const EdgeId>(&e, 1)));
  for (std::size_t len = 2; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    if (level_begin == level_end) break;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (EdgeId e : out_edges[out[i].range().index]) {
        out.push_back(*concat(out[i], g.path(std::span<const EdgeId>(&e, 1))));
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::uint64_t count_paths(const Graph& g, std::size_t max_len) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  auto add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };

  // ending[v]: number of paths of the current length ending at v.
  std::vector<std::uint64_t> ending(g.vertex_count(), 0);
  std::uint64_t total = g.vertex_count();
  if (max_len == 0) return total;
  for (EdgeId e : g.edges()) ending[g.range(e).index] = add(ending[g.range(e).index], 1);
  for (auto c : ending) total = add(total, c);
  for (std::size_t len = 2; len <= max_len; ++len) {
    std::vector<std::uint64_t> next(g.vertex_count(), 0);
    for (EdgeId e : g.edges()) {
      auto& slot = next[g.range(e).index];
      slot = add(slot, ending[g.source(e).index]);
    }
    ending = std::move(next);
    bool any = false;
    for (auto c : ending) {
      total = add(total, c);
      any = any || c != 0;
    }
    if (!any) break;
  }
  return total;
}

}  // namespace gwp

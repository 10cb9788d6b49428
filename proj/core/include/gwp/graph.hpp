#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gwp {

struct VertexId {
  std::uint32_t index = 0;
  friend auto operator<=>(VertexId, VertexId) = default;
};

struct EdgeId {
  std::uint32_t index = 0;
  friend auto operator<=>(EdgeId, EdgeId) = default;
};

/// An element of the free semigroupoid: a vertex unit or a nonempty
/// admissible edge path. Endpoints are cached so words can be composed
/// without consulting the graph.
class PathWord {
 public:
  static PathWord unit(VertexId v) { return PathWord(v, v, {}); }

  bool is_unit() const noexcept { return edges_.empty(); }
  VertexId source() const noexcept { return source_; }
  VertexId range() const noexcept { return range_; }
  std::size_t length() const noexcept { return edges_.size(); }
  std::span<const EdgeId> edges() const noexcept { return edges_; }

  /// Length-major, then lexicographic on edge indices; units by vertex.
  friend std::strong_ordering operator<=>(const PathWord& a, const PathWord& b);
  friend bool operator==(const PathWord& a, const PathWord& b) = default;

 private:
  friend class Graph;
  friend std::optional<PathWord> concat(const PathWord&, const PathWord&);
  friend std::optional<PathWord> strip_prefix(const PathWord&, const PathWord&);

  PathWord(VertexId s, VertexId r, std::vector<EdgeId> edges)
      : source_(s), range_(r), edges_(std::move(edges)) {}

  VertexId source_;
  VertexId range_;
  std::vector<EdgeId> edges_;
};

/// w1·w2 when r(w1) = s(w2), otherwise nullopt. Units act as identities.
std::optional<PathWord> concat(const PathWord& w1, const PathWord& w2);

/// The word h with word = prefix·h, if prefix is a prefix of word.
std::optional<PathWord> strip_prefix(const PathWord& prefix, const PathWord& word);

std::pair<VertexId, VertexId> endpoints(const PathWord& w);

/// Graphical footprint of a word: the set of distinct edges it traverses.
/// A vertex unit has no edges and carries its vertex instead.
struct Diagram {
  std::optional<VertexId> base;
  std::vector<EdgeId> edges;  // sorted, unique

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

Diagram diagram(const PathWord& w);
bool diagram_distinct(const PathWord& w1, const PathWord& w2);

struct EdgeSpec {
  std::string id;
  std::string source;
  std::string range;
};

/// Finite directed multigraph. Cheap to copy; copies share identity, and two
/// graphs compare equal only if one is a copy of the other.
///
/// Vertex and edge indices follow the lexicographic order of their ids.
class Graph {
 public:
  std::size_t vertex_count() const noexcept;
  std::size_t edge_count() const noexcept;

  const std::string& vertex_name(VertexId v) const;
  const std::string& edge_name(EdgeId e) const;
  VertexId source(EdgeId e) const;
  VertexId range(EdgeId e) const;

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;
  /// Throw ForeignIdError on unknown names.
  VertexId vertex(std::string_view name) const;
  EdgeId edge(std::string_view name) const;

  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edges() const;

  PathWord unit(VertexId v) const;
  PathWord unit(std::string_view vertex_name) const { return unit(vertex(vertex_name)); }
  /// Admissible edge path; throws DomainError when not admissible or empty.
  PathWord path(std::span<const EdgeId> edges) const;
  PathWord path(std::initializer_list<std::string_view> edge_names) const;
  PathWord path(const std::vector<std::string>& edge_names) const;
  /// Word syntax: "a,b,c" is an edge path, a bare vertex id a unit.
  PathWord parse_word(std::string_view text) const;

  /// True when every id of w belongs to this graph and w is admissible.
  bool contains(const PathWord& w) const;
  void require(const PathWord& w) const;

  /// "v" for units, "a,b" for paths.
  std::string word_name(const PathWord& w) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.data_ == b.data_; }

 private:
  struct Data;
  friend Graph build_graph(const std::vector<std::string>&, const std::vector<EdgeSpec>&);

  explicit Graph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Validates ids (distinct, disjoint namespaces) and endpoints.
Graph build_graph(const std::vector<std::string>& vertices, const std::vector<EdgeSpec>& edges);

/// Result of Graph::concat with foreign-id checking.
std::optional<PathWord> concat(const Graph& g, const PathWord& w1, const PathWord& w2);

/// Vertex units followed by all admissible paths of length <= max_len,
/// length-major then lexicographic by edge id.
std::vector<PathWord> enumerate_paths(const Graph& g, std::size_t max_len);

/// Number of words enumerate_paths would return, saturating at UINT64_MAX.
std::uint64_t count_paths(const Graph& g, std::size_t max_len);

}  // namespace gwp

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gralg {

/// Position of a vertex in the canonical order (level descending, then key ascending).
using VertexIndex = std::size_t;
/// Position of an edge in the canonical edge order (tail, then head).
using EdgeIndex = std::size_t;

struct Vertex {
  std::string key;
  int level = 0;
};

struct Edge {
  VertexIndex tail = 0;
  VertexIndex head = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A directed edge given by vertex keys, as read from input.
struct EdgeByKey {
  std::string tail;
  std::string head;
};

/// Ordered list of edges, each head equal to the next tail.
using Path = std::vector<EdgeIndex>;

/// Generator label (v, k) of the normal-word basis.
struct Letter {
  VertexIndex vertex = 0;
  int k = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Immutable directed graph with integer vertex levels.
///
/// Vertices are stored in canonical order, so that every edge of a valid layered
/// graph goes from a smaller index to a larger one and the level-0 vertex is last.
/// Construction only enforces structural sanity (unique keys, known endpoints);
/// the layered-graph invariants are checked by validate().
class LayeredGraph {
 public:
  LayeredGraph() = default;

  /// Throws gralg::Error on duplicate vertex keys or edges naming unknown vertices.
  /// Parallel edges are merged.
  static LayeredGraph from_parts(std::vector<Vertex> vertices, const std::vector<EdgeByKey>& edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  const Vertex& vertex(VertexIndex v) const { return vertices_.at(v); }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  const std::string& key(VertexIndex v) const { return vertices_.at(v).key; }
  int level(VertexIndex v) const { return vertices_.at(v).level; }
  int max_level() const;

  std::optional<VertexIndex> find(std::string_view key) const;
  /// Throws gralg::Error("unknown vertex ...") when the key is absent.
  VertexIndex index_of(std::string_view key) const;
  std::optional<EdgeIndex> find_edge(VertexIndex tail, VertexIndex head) const;

  /// Heads of out-edges / tails of in-edges, in canonical order.
  std::span<const VertexIndex> down(VertexIndex v) const { return down_.at(v); }
  std::span<const VertexIndex> up(VertexIndex v) const { return up_.at(v); }
  std::span<const EdgeIndex> out_edges(VertexIndex v) const { return out_edges_.at(v); }
  std::span<const EdgeIndex> in_edges(VertexIndex v) const { return in_edges_.at(v); }

  /// True iff there is a directed path of positive length from u to v.
  bool reaches(VertexIndex u, VertexIndex v) const;

  /// The unique level-0 vertex, if exactly one exists.
  std::optional<VertexIndex> star() const;
  /// Vertices with no in-edges / no out-edges.
  std::vector<VertexIndex> sources() const;
  std::vector<VertexIndex> sinks() const;

  /// Vertices of positive level in canonical order.
  std::vector<VertexIndex> positive_vertices() const;

  std::string edge_label(EdgeIndex e) const;

 private:
  void build_adjacency();
  void build_reachability();
  bool reaches_by_search(VertexIndex u, VertexIndex v) const;

  std::vector<Vertex> vertices_;
  std::map<std::string, VertexIndex, std::less<>> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexIndex>> down_;
  std::vector<std::vector<VertexIndex>> up_;
  std::vector<std::vector<EdgeIndex>> out_edges_;
  std::vector<std::vector<EdgeIndex>> in_edges_;
  // Bit rows of the strict reachability relation; empty when the graph is too
  // large or not level-decreasing, in which case queries fall back to search.
  std::vector<std::vector<std::uint64_t>> reach_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Checks every layered-graph invariant and lists each violation.
ValidationReport validate(const LayeredGraph& graph);

/// Parameters naming one builtin graph family or a JSON file.
struct GraphSpec {
  enum class Family { boolean, subspace, complete, young, file };

  Family family = Family::boolean;
  int n = 0;                // boolean, subspace
  long q = 0;               // subspace
  std::vector<int> levels;  // complete: m_n, ..., m_1, m_0 (top level first)
  int max_rank = 0;         // young
  std::string path;         // file

  static GraphSpec boolean(int n) { return {Family::boolean, n, 0, {}, 0, {}}; }
  static GraphSpec subspace(int n, long q) { return {Family::subspace, n, q, {}, 0, {}}; }
  static GraphSpec complete(std::vector<int> m) { return {Family::complete, 0, 0, std::move(m), 0, {}}; }
  static GraphSpec young(int max_rank) { return {Family::young, 0, 0, {}, max_rank, {}}; }
  static GraphSpec file(std::string path) { return {Family::file, 0, 0, {}, 0, std::move(path)}; }
};

/// Parses "boolean:3", "subspace:3,2", "complete:1,2,2,1", "young:4", "file:PATH".
/// Throws std::invalid_argument on syntax errors.
GraphSpec parse_graph_spec(std::string_view text);
std::string to_string(const GraphSpec& spec);

struct BuildOptions {
  std::size_t vertex_cap = 100000;
};

/// Builds a graph from a family description. The result always passes validate().
LayeredGraph build_graph(const GraphSpec& spec, const BuildOptions& options = {});

/// Vertex key used by the boolean family for a subset of {1..n} given as sorted elements.
std::string boolean_key(std::span<const int> elements);

bool is_prime(long q);

/// (v, k) covers (u, l) iff v > u and k = |v| - |u|; independent of l.
bool covers(const LayeredGraph& graph, const Letter& a, const Letter& b);

/// The path v -> ... -> star following, at each step, the out-edge whose head is
/// first in canonical vertex order. Throws for the level-0 vertex.
Path distinguished_path(const LayeredGraph& graph, VertexIndex v);

/// Vertices along a path: tail of the first edge, then each head.
std::vector<VertexIndex> path_vertices(const LayeredGraph& graph, const Path& path);

enum class Direction { down, up };
std::vector<VertexIndex> neighbors(const LayeredGraph& graph, VertexIndex v, Direction direction);

bool has_directed_path(const LayeredGraph& graph, VertexIndex u, VertexIndex v);

struct UniformityResult {
  bool uniform = true;
  std::optional<VertexIndex> witness;  // first vertex whose children split into >= 2 classes
  std::size_t classes = 1;
};
UniformityResult is_uniform(const LayeredGraph& graph);

struct ModularityResult {
  bool modular = true;
  /// 1 = a common-tail pair without a closing diamond below,
  /// 2 = a common-head pair without a closing diamond above.
  int failed_clause = 0;
  std::optional<std::pair<EdgeIndex, EdgeIndex>> witness;
};
ModularityResult is_modular(const LayeredGraph& graph);

/// Graph JSON: {"vertices":[{"id":..,"level":..}],"edges":[{"tail":..,"head":..}]}.
/// Unknown fields are rejected. The result is not validated.
LayeredGraph parse_graph_json(std::string_view text);
LayeredGraph read_graph_file(const std::string& path);
std::string write_graph_json(const LayeredGraph& graph);

}  // namespace gralg

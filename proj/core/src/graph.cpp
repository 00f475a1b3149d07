#include "gralg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gralg/error.hpp"

namespace gralg {

namespace {

constexpr std::size_t kReachabilityLimit = 20000;

bool canonical_less(const Vertex& a, const Vertex& b) {
  if (a.level != b.level) return a.level > b.level;
  return a.key < b.key;
}

// Disjoint-set forest over small index ranges.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

LayeredGraph LayeredGraph::from_parts(std::vector<Vertex> vertices, const std::vector<EdgeByKey>& edges) {
  LayeredGraph g;
  std::sort(vertices.begin(), vertices.end(), canonical_less);
  for (VertexIndex i = 0; i < vertices.size(); ++i) {
    if (!g.index_.emplace(vertices[i].key, i).second) {
      throw Error("duplicate vertex id '" + vertices[i].key + "'");
    }
  }
  g.vertices_ = std::move(vertices);

  std::vector<Edge> resolved;
  resolved.reserve(edges.size());
  for (const auto& e : edges) {
    auto t = g.find(e.tail);
    auto h = g.find(e.head);
    if (!t) throw Error("edge names unknown vertex '" + e.tail + "'");
    if (!h) throw Error("edge names unknown vertex '" + e.head + "'");
    resolved.push_back({*t, *h});
  }
  std::sort(resolved.begin(), resolved.end());
  resolved.erase(std::unique(resolved.begin(), resolved.end()), resolved.end());
  g.edges_ = std::move(resolved);
  g.build_adjacency();
  g.build_reachability();
  return g;
}

void LayeredGraph::build_adjacency() {
  const std::size_t n = vertices_.size();
  down_.assign(n, {});
  up_.assign(n, {});
  out_edges_.assign(n, {});
  in_edges_.assign(n, {});
  for (EdgeIndex i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    down_[e.tail].push_back(e.head);
    out_edges_[e.tail].push_back(i);
    up_[e.head].push_back(e.tail);
    in_edges_[e.head].push_back(i);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(up_[v].begin(), up_[v].end());
    std::sort(in_edges_[v].begin(), in_edges_[v].end(),
              [&](EdgeIndex a, EdgeIndex b) { return edges_[a].tail < edges_[b].tail; });
  }
}

void LayeredGraph::build_reachability() {
  reach_.clear();
  const std::size_t n = vertices_.size();
  if (n == 0 || n > kReachabilityLimit) return;
  for (const auto& e : edges_) {
    if (e.tail >= e.head) return;  // not topologically ordered; use search
  }
  const std::size_t words = (n + 63) / 64;
  reach_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t v = n; v-- > 0;) {
    auto& row = reach_[v];
    for (VertexIndex w : down_[v]) {
      row[w / 64] |= std::uint64_t{1} << (w % 64);
      const auto& sub = reach_[w];
      for (std::size_t k = 0; k < words; ++k) row[k] |= sub[k];
    }
  }
}

int LayeredGraph::max_level() const {
  int m = 0;
  for (const auto& v : vertices_) m = std::max(m, v.level);
  return m;
}

std::optional<VertexIndex> LayeredGraph::find(std::string_view key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexIndex LayeredGraph::index_of(std::string_view key) const {
  auto v = find(key);
  if (!v) throw Error("unknown vertex '" + std::string(key) + "'");
  return *v;
}

std::optional<EdgeIndex> LayeredGraph::find_edge(VertexIndex tail, VertexIndex head) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{tail, head});
  if (it == edges_.end() || it->tail != tail || it->head != head) return std::nullopt;
  return static_cast<EdgeIndex>(it - edges_.begin());
}

bool LayeredGraph::reaches(VertexIndex u, VertexIndex v) const {
  if (u >= vertices_.size() || v >= vertices_.size()) throw Error("vertex index out of range");
  if (!reach_.empty()) return (reach_[u][v / 64] >> (v % 64)) & 1U;
  return reaches_by_search(u, v);
}

bool LayeredGraph::reaches_by_search(VertexIndex u, VertexIndex v) const {
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<VertexIndex> stack(down_[u].begin(), down_[u].end());
  while (!stack.empty()) {
    VertexIndex w = stack.back();
    stack.pop_back();
    if (w == v) return true;
    if (seen[w]) continue;
    seen[w] = 1;
    for (VertexIndex x : down_[w]) stack.push_back(x);
  }
  return false;
}

std::optional<VertexIndex> LayeredGraph::star() const {
  std::optional<VertexIndex> found;
  for (VertexIndex i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].level == 0) {
      if (found) return std::nullopt;
      found = i;
    }
  }
  return found;
}

std::vector<VertexIndex> LayeredGraph::sources() const {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (up_[v].empty()) out.push_back(v);
  }
  return out;
}

std::vector<VertexIndex> LayeredGraph::sinks() const {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (down_[v].empty()) out.push_back(v);
  }
  return out;
}

std::vector<VertexIndex> LayeredGraph::positive_vertices() const {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].level > 0) out.push_back(v);
  }
  return out;
}

std::string LayeredGraph::edge_label(EdgeIndex e) const {
  const auto& ed = edges_.at(e);
  return vertices_[ed.tail].key + ">" + vertices_[ed.head].key;
}

ValidationReport validate(const LayeredGraph& graph) {
  ValidationReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.failures.push_back(std::move(msg));
  };

  if (graph.vertex_count() == 0) fail("graph has no vertices");

  std::vector<VertexIndex> level_zero;
  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
    const auto& vx = graph.vertex(v);
    if (vx.level < 0) fail("vertex " + vx.key + " has negative level " + std::to_string(vx.level));
    if (vx.level == 0) level_zero.push_back(v);
  }
  if (graph.vertex_count() > 0 && level_zero.empty()) fail("no level-0 vertex");
  if (level_zero.size() > 1) {
    std::string names;
    for (VertexIndex v : level_zero) names += (names.empty() ? "" : ", ") + graph.key(v);
    fail("minimal vertex not unique: level-0 vertices " + names);
  }

  for (EdgeIndex e = 0; e < graph.edge_count(); ++e) {
    const auto& ed = graph.edge(e);
    int drop = graph.level(ed.tail) - graph.level(ed.head);
    if (drop != 1) {
      fail("edge " + graph.edge_label(e) + " drops " + std::to_string(drop) + " levels");
    }
  }

  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
    if (graph.level(v) > 0 && graph.out_edges(v).empty()) {
      fail("vertex " + graph.key(v) + " of level " + std::to_string(graph.level(v)) +
           " has no outgoing edge (minimal vertex not unique)");
    }
  }
  return report;
}

bool covers(const LayeredGraph& graph, const Letter& a, const Letter& b) {
  if (a.vertex >= graph.vertex_count() || b.vertex >= graph.vertex_count()) {
    throw Error("unknown vertex in letter");
  }
  return a.k == graph.level(a.vertex) - graph.level(b.vertex) && graph.reaches(a.vertex, b.vertex);
}

Path distinguished_path(const LayeredGraph& graph, VertexIndex v) {
  if (v >= graph.vertex_count()) throw Error("unknown vertex index");
  if (graph.level(v) == 0) throw Error("distinguished path is undefined for the level-0 vertex");
  Path path;
  VertexIndex cur = v;
  while (graph.level(cur) > 0) {
    auto outs = graph.out_edges(cur);
    if (outs.empty()) throw Error("vertex " + graph.key(cur) + " has no outgoing edge");
    // out_edges are sorted by head index, which is canonical vertex order.
    EdgeIndex e = outs.front();
    path.push_back(e);
    cur = graph.edge(e).head;
  }
  return path;
}

std::vector<VertexIndex> path_vertices(const LayeredGraph& graph, const Path& path) {
  std::vector<VertexIndex> out;
  if (path.empty()) return out;
  out.push_back(graph.edge(path.front()).tail);
  for (EdgeIndex e : path) out.push_back(graph.edge(e).head);
  return out;
}

std::vector<VertexIndex> neighbors(const LayeredGraph& graph, VertexIndex v, Direction direction) {
  if (v >= graph.vertex_count()) throw Error("unknown vertex index");
  auto span = direction == Direction::down ? graph.down(v) : graph.up(v);
  return {span.begin(), span.end()};
}

bool has_directed_path(const LayeredGraph& graph, VertexIndex u, VertexIndex v) {
  if (u >= graph.vertex_count() || v >= graph.vertex_count()) throw Error("unknown vertex index");
  return graph.reaches(u, v);
}

UniformityResult is_uniform(const LayeredGraph& graph) {
  UniformityResult result;
  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
    if (graph.level(v) < 2) continue;
    auto children = graph.down(v);
    if (children.size() < 2) continue;
    UnionFind uf(children.size());
    // Index children by grandchild; children sharing a grandchild are joined.
    std::map<VertexIndex, std::size_t> first_parent;
    for (std::size_t i = 0; i < children.size(); ++i) {
      for (VertexIndex x : graph.down(children[i])) {
        auto [it, inserted] = first_parent.emplace(x, i);
        if (!inserted) uf.unite(i, it->second);
      }
    }
    std::size_t classes = 0;
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (uf.find(i) == i) ++classes;
    }
    if (classes > 1) {
      result.uniform = false;
      result.witness = v;
      result.classes = classes;
      return result;
    }
  }
  return result;
}

ModularityResult is_modular(const LayeredGraph& graph) {
  ModularityResult result;
  // Clause 1: edges e1 = (v, a), e2 = (v, b) need f1 = (a, x), f2 = (b, x).
  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
    auto outs = graph.out_edges(v);
    for (std::size_t i = 0; i < outs.size(); ++i) {
      for (std::size_t j = i + 1; j < outs.size(); ++j) {
        VertexIndex a = graph.edge(outs[i]).head;
        VertexIndex b = graph.edge(outs[j]).head;
        auto da = graph.down(a);
        auto db = graph.down(b);
        bool closes = std::any_of(da.begin(), da.end(), [&](VertexIndex x) {
          return std::binary_search(db.begin(), db.end(), x);
        });
        if (!closes) {
          result.modular = false;
          result.failed_clause = 1;
          result.witness = std::make_pair(outs[i], outs[j]);
          return result;
        }
      }
    }
  }
  // Clause 2: edges h1 = (a, v), h2 = (b, v) need g1 = (y, a), g2 = (y, b).
  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
    auto ins = graph.in_edges(v);
    for (std::size_t i = 0; i < ins.size(); ++i) {
      for (std::size_t j = i + 1; j < ins.size(); ++j) {
        VertexIndex a = graph.edge(ins[i]).tail;
        VertexIndex b = graph.edge(ins[j]).tail;
        auto ua = graph.up(a);
        auto ub = graph.up(b);
        bool closes = std::any_of(ua.begin(), ua.end(), [&](VertexIndex y) {
          return std::binary_search(ub.begin(), ub.end(), y);
        });
        if (!closes) {
          result.modular = false;
          result.failed_clause = 2;
          result.witness = std::make_pair(ins[i], ins[j]);
          return result;
        }
      }
    }
  }
  return result;
}

bool is_prime(long q) {
  if (q < 2) return false;
  for (long d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

namespace {

std::vector<long> parse_int_list(std::string_view text, std::string_view context) {
  std::vector<long> out;
  if (text.empty()) throw std::invalid_argument("missing parameters in graph spec '" + std::string(context) + "'");
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    long value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw std::invalid_argument("malformed integer '" + std::string(part) + "' in graph spec '" +
                                  std::string(context) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

GraphSpec parse_graph_spec(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("graph spec must look like family:params, got '" + std::string(text) + "'");
  }
  auto family = text.substr(0, colon);
  auto params = text.substr(colon + 1);
  if (family == "file") {
    if (params.empty()) throw std::invalid_argument("file spec needs a path");
    return GraphSpec::file(std::string(params));
  }
  auto values = parse_int_list(params, text);
  auto expect = [&](std::size_t count) {
    if (values.size() != count) {
      throw std::invalid_argument("graph spec '" + std::string(text) + "' expects " + std::to_string(count) +
                                  " parameter(s)");
    }
  };
  if (family == "boolean") {
    expect(1);
    return GraphSpec::boolean(static_cast<int>(values[0]));
  }
  if (family == "subspace") {
    expect(2);
    return GraphSpec::subspace(static_cast<int>(values[0]), values[1]);
  }
  if (family == "complete") {
    std::vector<int> m(values.begin(), values.end());
    return GraphSpec::complete(std::move(m));
  }
  if (family == "young") {
    expect(1);
    return GraphSpec::young(static_cast<int>(values[0]));
  }
  throw std::invalid_argument("unknown graph family '" + std::string(family) + "'");
}

std::string to_string(const GraphSpec& spec) {
  switch (spec.family) {
    case GraphSpec::Family::boolean:
      return "boolean:" + std::to_string(spec.n);
    case GraphSpec::Family::subspace:
      return "subspace:" + std::to_string(spec.n) + "," + std::to_string(spec.q);
    case GraphSpec::Family::complete: {
      std::string s = "complete:";
      for (std::size_t i = 0; i < spec.levels.size(); ++i) s += (i ? "," : "") + std::to_string(spec.levels[i]);
      return s;
    }
    case GraphSpec::Family::young:
      return "young:" + std::to_string(spec.max_rank);
    case GraphSpec::Family::file:
      return "file:" + spec.path;
  }
  return {};
}

}  // namespace gralg

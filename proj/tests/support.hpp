#pragma once

#include <string>
#include <vector>

#include "gralg/graph.hpp"
#include "gralg/rational.hpp"
#include "gralg/series.hpp"
#include "gralg/sufficiency.hpp"

namespace gralg::test {

inline TruncatedSeries series(const std::vector<long>& coeffs) {
  std::vector<Rational> c;
  for (long x : coeffs) c.emplace_back(x);
  return TruncatedSeries(c);
}

inline LayeredGraph build(const std::string& spec) { return build_graph(parse_graph_spec(spec)); }

inline VertexIndex vx(const LayeredGraph& g, const std::string& key) { return g.index_of(key); }

inline EdgeIndex edge(const LayeredGraph& g, const std::string& tail, const std::string& head) {
  auto e = g.find_edge(g.index_of(tail), g.index_of(head));
  if (!e) throw Error("missing edge " + tail + ">" + head);
  return *e;
}

/// Edge set of boolean(n) given by pseudo-root labels such as "12:3".
inline EdgeSet labels(const LayeredGraph& g, int n, const std::vector<std::string>& items) {
  EdgeSet out;
  for (const auto& item : items) out.insert(edge_for_pseudoroot(g, n, parse_pseudoroot_label(item)));
  return out;
}

/// Two disjoint chains U > x > p > * and U > y > r > * sharing only the top and
/// bottom, so the children x, y of U have no common child.
inline LayeredGraph non_uniform_graph() {
  return LayeredGraph::from_parts({{"U", 3}, {"x", 2}, {"y", 2}, {"p", 1}, {"r", 1}, {"*", 0}},
                                  {{"U", "x"}, {"U", "y"}, {"x", "p"}, {"y", "r"}, {"p", "*"}, {"r", "*"}});
}

}  // namespace gralg::test

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "gralg/error.hpp"
#include "gralg/graph.hpp"
#include "gralg/series.hpp"
#include "support.hpp"

using namespace gralg;
using gralg::test::build;
using gralg::test::edge;
using gralg::test::vx;

namespace {

bool has_failure(const ValidationReport& r, const std::string& needle) {
  for (const auto& f : r.failures) {
    if (f.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST(GraphBuild, DiamondShape) {
  auto g = build("boolean:2");
  ASSERT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(g.key(0), "{12}");
  EXPECT_EQ(g.key(3), "{}");
  EXPECT_EQ(g.star(), VertexIndex{3});
  EXPECT_TRUE(validate(g).ok);
}

TEST(GraphBuild, BooleanCounts) {
  for (int n = 1; n <= 5; ++n) {
    auto g = build("boolean:" + std::to_string(n));
    EXPECT_EQ(g.vertex_count(), std::size_t{1} << n);
    EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(n) << (n - 1));
    std::vector<long> per_level(n + 1, 0);
    for (const auto& v : g.vertices()) ++per_level[v.level];
    for (int k = 0; k <= n; ++k) EXPECT_EQ(BigInt(per_level[k]), q_binomial(n, k, 1)) << n << " " << k;
  }
}

TEST(GraphBuild, SubspaceCountsMatchGaussianBinomials) {
  auto g22 = build("subspace:2,2");
  EXPECT_EQ(g22.vertex_count(), 5u);
  EXPECT_EQ(g22.edge_count(), 6u);
  for (auto [n, q] : {std::pair{3, 2L}, {2, 3L}, {4, 2L}}) {
    auto g = build("subspace:" + std::to_string(n) + "," + std::to_string(q));
    std::vector<long> per_level(n + 1, 0);
    for (const auto& v : g.vertices()) ++per_level[v.level];
    for (int k = 0; k <= n; ++k) EXPECT_EQ(BigInt(per_level[k]), q_binomial(n, k, q));
    EXPECT_TRUE(validate(g).ok);
  }
  // Oracle from brute-force subspace enumeration: 67 subspaces of F_2^4, 35 planes.
  EXPECT_EQ(build("subspace:4,2").vertex_count(), 67u);
}

TEST(GraphBuild, CompleteChainIsTreeLike) {
  auto g = build("complete:1,1,1");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  auto g4 = build("complete:1,1,1,1");
  EXPECT_EQ(g4.edge_count(), 3u);
}

TEST(GraphBuild, YoungSmall) {
  auto g = build("young:4");
  EXPECT_EQ(g.vertex_count(), 12u);
  EXPECT_EQ(g.edge_count(), 14u);
  EXPECT_TRUE(validate(g).ok);
}

TEST(GraphBuild, RejectsBadParameters) {
  EXPECT_THROW(build_graph(GraphSpec::subspace(2, 4)), Error);
  EXPECT_THROW(build_graph(GraphSpec::complete({1, 2, 2})), Error);
  EXPECT_THROW(build_graph(GraphSpec::boolean(12), BuildOptions{100}), Error);
  EXPECT_THROW(parse_graph_spec("boolean"), std::invalid_argument);
  EXPECT_THROW(parse_graph_spec("cube:3"), std::invalid_argument);
  EXPECT_THROW(parse_graph_spec("boolean:x"), std::invalid_argument);
}

TEST(GraphSpecText, RoundTrip) {
  for (const char* s : {"boolean:3", "subspace:3,2", "complete:1,2,2,1", "young:4"}) {
    EXPECT_EQ(to_string(parse_graph_spec(s)), s);
  }
}

TEST(Validate, ReportsEachViolation) {
  auto skip = LayeredGraph::from_parts({{"a", 2}, {"b", 1}, {"*", 0}}, {{"a", "*"}, {"b", "*"}});
  auto r = validate(skip);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(has_failure(r, "drops 2 levels"));

  auto two_bottoms = LayeredGraph::from_parts({{"a", 1}, {"x", 0}, {"y", 0}}, {{"a", "x"}, {"a", "y"}});
  r = validate(two_bottoms);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(has_failure(r, "minimal vertex not unique"));

  auto dead_end = LayeredGraph::from_parts({{"a", 1}, {"b", 1}, {"*", 0}}, {{"a", "*"}});
  EXPECT_FALSE(validate(dead_end).ok);
}

TEST(GraphParts, RejectsDuplicatesAndMergesParallelEdges) {
  EXPECT_THROW(LayeredGraph::from_parts({{"a", 1}, {"a", 0}}, {}), Error);
  EXPECT_THROW(LayeredGraph::from_parts({{"a", 1}, {"*", 0}}, {{"a", "z"}}), Error);
  auto g = LayeredGraph::from_parts({{"a", 1}, {"*", 0}}, {{"a", "*"}, {"a", "*"}});
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Covers, DiamondExamples) {
  auto g = build("boolean:2");
  const auto top = vx(g, "{12}"), one = vx(g, "{1}"), two = vx(g, "{2}");
  EXPECT_TRUE(covers(g, {top, 1}, {one, 1}));
  EXPECT_TRUE(covers(g, {top, 1}, {two, 1}));
  EXPECT_FALSE(covers(g, {top, 2}, {one, 1}));
  EXPECT_TRUE(covers(g, {top, 2}, {vx(g, "{}"), 1}));
}

TEST(Covers, IndependentOfSecondK) {
  auto g = build("boolean:4");
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    VertexIndex v = rng() % g.vertex_count();
    VertexIndex u = rng() % g.vertex_count();
    if (g.level(v) == 0) continue;
    int k = 1 + static_cast<int>(rng() % g.level(v));
    bool base = covers(g, {v, k}, {u, 1});
    for (int l = 2; l <= 4; ++l) EXPECT_EQ(covers(g, {v, k}, {u, l}), base);
  }
}

TEST(DistinguishedPath, FollowsSmallestHead) {
  auto g = build("boolean:2");
  auto p = distinguished_path(g, vx(g, "{12}"));
  auto vs = path_vertices(g, p);
  ASSERT_EQ(vs.size(), 3u);
  EXPECT_EQ(g.key(vs[1]), "{1}");
  EXPECT_EQ(g.key(vs[2]), "{}");

  auto g3 = build("boolean:3");
  vs = path_vertices(g3, distinguished_path(g3, vx(g3, "{23}")));
  ASSERT_EQ(vs.size(), 3u);
  EXPECT_EQ(g3.key(vs[1]), "{2}");

  auto chain = build("complete:1,1,1");
  EXPECT_EQ(distinguished_path(chain, 0).size(), 2u);
  EXPECT_THROW(distinguished_path(g, vx(g, "{}")), Error);
}

TEST(Neighbors, DiamondDirections) {
  auto g = build("boolean:2");
  auto down = neighbors(g, vx(g, "{12}"), Direction::down);
  ASSERT_EQ(down.size(), 2u);
  EXPECT_EQ(g.key(down[0]), "{1}");
  EXPECT_EQ(g.key(down[1]), "{2}");
  auto up = neighbors(g, vx(g, "{1}"), Direction::up);
  ASSERT_EQ(up.size(), 1u);
  EXPECT_EQ(g.key(up[0]), "{12}");
  EXPECT_TRUE(neighbors(g, vx(g, "{}"), Direction::down).empty());
}

TEST(DirectedPath, StrictOrder) {
  auto g = build("boolean:2");
  EXPECT_TRUE(has_directed_path(g, vx(g, "{12}"), vx(g, "{}")));
  EXPECT_FALSE(has_directed_path(g, vx(g, "{1}"), vx(g, "{2}")));
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) EXPECT_FALSE(has_directed_path(g, v, v));
}

TEST(Uniformity, BuiltinsAreUniform) {
  for (const char* s : {"boolean:2", "boolean:4", "subspace:3,2", "subspace:2,3", "complete:1,2,2,1",
                        "complete:1,3,2,1", "young:6"}) {
    EXPECT_TRUE(is_uniform(build(s)).uniform) << s;
  }
}

TEST(Uniformity, CounterexampleHasWitness) {
  auto g = gralg::test::non_uniform_graph();
  ASSERT_TRUE(validate(g).ok);
  auto r = is_uniform(g);
  EXPECT_FALSE(r.uniform);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(g.key(*r.witness), "U");
  EXPECT_EQ(r.classes, 2u);
}

TEST(Modularity, BuiltinsAndPendantBranch) {
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(is_modular(build("boolean:" + std::to_string(n))).modular);
  EXPECT_TRUE(is_modular(build("complete:1,2,2,1")).modular);

  auto pendant = LayeredGraph::from_parts({{"a", 2}, {"b", 1}, {"c", 1}, {"*", 0}},
                                          {{"a", "b"}, {"b", "*"}, {"c", "*"}});
  ASSERT_TRUE(validate(pendant).ok);
  auto r = is_modular(pendant);
  EXPECT_FALSE(r.modular);
  EXPECT_EQ(r.failed_clause, 2);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->first, edge(pendant, "b", "*"));
}

TEST(GraphJson, RoundTripAndRejectsUnknownFields) {
  auto g = build("young:3");
  auto back = parse_graph_json(write_graph_json(g));
  EXPECT_EQ(write_graph_json(back), write_graph_json(g));
  EXPECT_THROW(parse_graph_json(R"({"vertices":[],"edges":[],"extra":1})"), Error);
  EXPECT_THROW(parse_graph_json("not json"), Error);
}

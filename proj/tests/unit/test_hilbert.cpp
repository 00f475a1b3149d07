#include <gtest/gtest.h>

#include "gralg/error.hpp"
#include "gralg/hilbert.hpp"
#include "gralg/series.hpp"
#include "support.hpp"

using namespace gralg;
using gralg::test::build;
using gralg::test::series;
using gralg::test::vx;

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

TEST(Zeta, Diamond) {
  auto g = build("boolean:2");
  auto z = zeta_matrix(g);
  ASSERT_EQ(z.size(), 4u);
  EXPECT_EQ(z.exponent[vx(g, "{12}")][vx(g, "{}")], 2);
  EXPECT_FALSE(z.nonzero(vx(g, "{1}"), vx(g, "{2}")));
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(z.exponent[i][i], 0);
    for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(z.nonzero(i, j));
  }
}

TEST(Zeta, ChainAndPoint) {
  auto chain = build("complete:1,1,1");
  auto z = zeta_matrix(chain);
  EXPECT_EQ(z.exponent[0][1], 1);
  EXPECT_EQ(z.exponent[0][2], 2);
  auto point = build("complete:1");
  EXPECT_EQ(zeta_matrix(point).size(), 1u);
}

TEST(Mobius, DiamondByHand) {
  auto g = build("boolean:2");
  auto mu = mobius_matrix(g);
  const auto top = vx(g, "{12}"), bottom = vx(g, "{}");
  EXPECT_EQ(mu[top][bottom], 1);
  EXPECT_EQ(mu[top][vx(g, "{1}")], -1);
  EXPECT_EQ(mu[top][vx(g, "{2}")], -1);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(mu[i][i], 1);
}

TEST(Mobius, ChainPattern) {
  auto mu = mobius_matrix(build("complete:1,1,1,1"));
  EXPECT_EQ(mu[0][1], -1);
  EXPECT_EQ(mu[0][2], 0);
  EXPECT_EQ(mu[0][3], 0);
  EXPECT_EQ(mu[1][2], -1);
}

TEST(Mobius, InvertsZetaAtOne) {
  for (const char* s : {"boolean:3", "subspace:3,2", "complete:1,3,2,1", "young:5"}) {
    auto g = build(s);
    EXPECT_EQ(multiply(mobius_matrix(g), zeta_at_one(g)), identity(g.vertex_count())) << s;
  }
}

TEST(Hilbert, DiamondAllMethods) {
  auto g = build("boolean:2");
  for (auto m : {HilbertMethod::zeta, HilbertMethod::chains, HilbertMethod::basis}) {
    EXPECT_EQ(hilbert_series(g, 3, m), series({1, 3, 8, 21}));
  }
}

// Reference values from an independent normal-word enumeration (tests/oracle/oracle.py).
TEST(Hilbert, ThreeWayAgreementOnOracleGraphs) {
  struct Case {
    const char* spec;
    std::vector<long> coeffs;
  };
  const std::vector<Case> cases = {
      {"boolean:3", {1, 7, 44, 274, 1705, 10609, 66012}},
      {"subspace:2,2", {1, 4, 14, 48, 164, 560, 1912}},
      {"subspace:3,2", {1, 15, 205, 2783, 37765, 512455}},
      {"complete:1,2,2,1", {1, 5, 22, 96, 419, 1829, 7984}},
      {"complete:1,3,2,1", {1, 6, 31, 158, 805, 4102, 20903}},
      {"young:4", {1, 11, 118, 1265, 13561, 145376, 1558453}},
  };
  for (const auto& c : cases) {
    auto g = build(c.spec);
    const int order = static_cast<int>(c.coeffs.size()) - 1;
    auto expected = series(c.coeffs);
    EXPECT_EQ(hilbert_series(g, order, HilbertMethod::zeta), expected) << c.spec;
    EXPECT_EQ(hilbert_series(g, order, HilbertMethod::chains), expected) << c.spec;
    EXPECT_EQ(hilbert_series(g, order, HilbertMethod::basis), expected) << c.spec;
  }
}

TEST(Hilbert, ZetaDenominatorIdentity) {
  for (const char* s : {"boolean:4", "young:4", "complete:1,2,3,1"}) {
    auto g = build(s);
    auto h = hilbert_series(g, 8, HilbertMethod::zeta);
    EXPECT_EQ(mul(h, zeta_denominator(g, 8)), series({1, -1, 0, 0, 0, 0, 0, 0, 0})) << s;
  }
}

TEST(Hilbert, DegreeOneIsPositiveVertexCount) {
  for (const char* s : {"boolean:3", "subspace:2,3", "young:5", "complete:1,4,1"}) {
    auto g = build(s);
    EXPECT_EQ(hilbert_series(g, 1, HilbertMethod::zeta)[1], Rational(g.vertex_count() - 1)) << s;
  }
}

TEST(Hilbert, TreeLikeIsFree) {
  // A rooted tree hanging from the star has no two paths with equal endpoints.
  auto tree = LayeredGraph::from_parts({{"a", 2}, {"b", 2}, {"c", 1}, {"d", 1}, {"*", 0}},
                                       {{"a", "c"}, {"b", "d"}, {"c", "*"}, {"d", "*"}});
  for (auto m : {HilbertMethod::zeta, HilbertMethod::chains, HilbertMethod::basis}) {
    EXPECT_EQ(hilbert_series(tree, 5, m), closed_form(ClosedFormSpec::make_free(4), 5));
  }
}

TEST(Hilbert, ChainBudgetIsEnforced) {
  auto g = build("boolean:4");
  HilbertOptions tight;
  tight.chain_budget = 10;
  EXPECT_THROW(hilbert_series(g, 4, HilbertMethod::chains, tight), BudgetExceeded);
  EXPECT_THROW(hilbert_series(g, -1, HilbertMethod::zeta), Error);
}

TEST(BasisWords, DiamondLists) {
  auto g = build("boolean:2");
  auto d0 = basis_words(g, 0);
  ASSERT_EQ(d0.size(), 1u);
  EXPECT_TRUE(d0[0].letters.empty());
  auto d1 = basis_words(g, 1);
  ASSERT_EQ(d1.size(), 3u);
  auto d2 = basis_words(g, 2);
  EXPECT_EQ(d2.size(), 8u);
  std::size_t single = 0;
  for (const auto& w : d2) {
    EXPECT_EQ(w.degree(), 2);
    if (w.letters.size() == 1) {
      ++single;
      EXPECT_EQ(w.letters[0], (Letter{vx(g, "{12}"), 2}));
    }
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) EXPECT_FALSE(covers(g, w.letters[i], w.letters[i + 1]));
  }
  EXPECT_EQ(single, 1u);
}

TEST(BasisWords, CountMatchesSeriesAndCap) {
  auto g = build("young:4");
  auto h = hilbert_series(g, 3, HilbertMethod::basis);
  for (int d = 0; d <= 3; ++d) EXPECT_EQ(Rational(basis_words(g, d).size()), h[d]);
  EXPECT_THROW(basis_words(g, 3, 100), BudgetExceeded);
}

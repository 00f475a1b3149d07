// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "gralg/error.hpp"
#include "gralg/hilbert.hpp"
#include "gralg/quadratic.hpp"
#include "gralg/series.hpp"
#include "gralg/sufficiency.hpp"
#include "gralg/vieta.hpp"
#include "support.hpp"

using namespace gralg;
using gralg::test::build;
using gralg::test::series;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail.clear();
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& text) {
    if (pass) detail += (detail.empty() ? "" : "; ") + text;
  }
};

const std::vector<std::string> kHilbertGraphs = {
    "boolean:1",  "boolean:2",       "boolean:3",        "boolean:4", "subspace:1,2",
    "subspace:2,2", "subspace:3,2", "complete:1,2,2,1", "complete:1,3,2,1", "young:4",
};

Verdict criterion1() {
  Verdict v;
  for (int n = 1; n <= 5; ++n) {
    auto g = build_graph(GraphSpec::boolean(n));
    bool ok = hilbert_series(g, 8, HilbertMethod::zeta) == closed_form(ClosedFormSpec::make_qn(n), 8);
    v.require(ok, "boolean:" + std::to_string(n) + " differs from closed form");
  }
  v.note("boolean n=1..5 equal closed form to order 8");
  return v;
}

Verdict criterion2() {
  Verdict v;
  for (const auto& s : kHilbertGraphs) {
    auto g = build(s);
    v.require(hilbert_series(g, 6, HilbertMethod::basis) == hilbert_series(g, 6, HilbertMethod::zeta),
              s + ": basis differs from zeta");
  }
  auto diamond = hilbert_series(build("boolean:2"), 3, HilbertMethod::basis);
  v.require(diamond == series({1, 3, 8, 21}), "diamond is " + to_human(diamond));
  v.note(std::to_string(kHilbertGraphs.size()) + " graphs agree to order 6; diamond 1, 3, 8, 21");
  return v;
}

Verdict criterion3() {
  Verdict v;
  std::size_t checked = 0;
  for (const auto& s : kHilbertGraphs) {
    auto g = build(s);
    try {
      v.require(hilbert_series(g, 6, HilbertMethod::chains) == hilbert_series(g, 6, HilbertMethod::zeta),
                s + ": chains differ from zeta");
      ++checked;
    } catch (const BudgetExceeded&) {
      v.note(s + " skipped (chain budget)");
    }
  }
  v.note(std::to_string(checked) + " graphs agree to order 6");
  return v;
}

Verdict criterion4() {
  Verdict v;
  for (auto [n, q] : std::vector<std::pair<int, long>>{{2, 2}, {3, 2}, {2, 3}, {4, 2}}) {
    auto g = build_graph(GraphSpec::subspace(n, q));
    bool ok = hilbert_series(g, 6, HilbertMethod::zeta) == closed_form(ClosedFormSpec::make_subspace(n, q), 6);
    v.require(ok, "subspace:" + std::to_string(n) + "," + std::to_string(q) + " differs");
  }
  v.note("(2,2) (3,2) (2,3) (4,2) equal closed form to order 6");
  return v;
}

Verdict criterion5() {
  Verdict v;
  const int order = 8;
  for (int n = 1; n <= 5; ++n) {
    // 1 - t (2 - t)^n built by repeated multiplication.
    auto p = TruncatedSeries::one(order);
    for (int i = 0; i < n; ++i) p = p * series({2, -1, 0, 0, 0, 0, 0, 0, 0});
    auto expected = TruncatedSeries::one(order) - TruncatedSeries::monomial(order, 1, 1) * p;
    v.require(closed_form_denominator(ClosedFormSpec::make_subspace(n, 1), order) == expected,
              "n=" + std::to_string(n) + " denominator differs");
  }
  v.note("denominators equal 1 - t(2-t)^n for n=1..5");
  return v;
}

Verdict criterion6() {
  Verdict v;
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const int length = 2 + static_cast<int>(rng() % 4);
    std::vector<int> m;
    for (int i = 0; i + 1 < length; ++i) m.push_back(1 + static_cast<int>(rng() % 4));
    m.push_back(1);
    std::string name = "complete:";
    for (std::size_t i = 0; i < m.size(); ++i) name += (i ? "," : "") + std::to_string(m[i]);
    auto g = build_graph(GraphSpec::complete(m));
    v.require(closed_form(ClosedFormSpec::make_complete(m), 6) == hilbert_series(g, 6, HilbertMethod::zeta),
              name + " differs");
  }
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> ones(static_cast<std::size_t>(n) + 1, 1);
    auto geometric = reciprocal(TruncatedSeries::one(6) - TruncatedSeries::monomial(6, n, 1));
    v.require(closed_form(ClosedFormSpec::make_complete(ones), 6) == geometric,
              "C[1..1] with n=" + std::to_string(n) + " is not 1/(1-nt)");
  }
  v.require(closed_form(ClosedFormSpec::make_complete({1, 2, 1}), 8) == closed_form(ClosedFormSpec::make_qn(2), 8),
            "C[1,2,1] differs from qn(2)");
  v.note("20 random m-lists, C[1..1] for n<=5 and C[1,2,1] agree");
  return v;
}

Verdict criterion7() {
  Verdict v;
  for (const auto& s : kHilbertGraphs) v.require(is_uniform(build(s)).uniform, s + " not uniform");
  v.require(!is_uniform(gralg::test::non_uniform_graph()).uniform, "counterexample reported uniform");
  v.note("builtins uniform; counterexample rejected");
  return v;
}

Verdict criterion8() {
  Verdict v;
  for (const auto& s : kHilbertGraphs) {
    auto g = build(s);
    auto pairs = relations_quadratic(g, RelationMode::path_pairs);
    v.require(pairs == relations_quadratic(g, RelationMode::uniform_shortcut), s + ": relation spaces differ");
    auto h = hilbert_series(g, 4, HilbertMethod::zeta);
    auto dims = graded_dims(pairs, 4, AlgebraSide::algebra);
    for (int k = 0; k <= 4; ++k) v.require(Rational(dims[k]) == h[k], s + ": degree " + std::to_string(k));
  }
  auto b3 = relations_quadratic(build("boolean:3"), RelationMode::path_pairs);
  v.require(Rational(graded_dim(b3, 2, AlgebraSide::algebra)) == closed_form(ClosedFormSpec::make_qn(3), 2)[2],
            "boolean:3 degree 2");
  v.note("relation modes equal and graded dims match zeta for k<=4; boolean:3 A_2 = 44");
  return v;
}

Verdict criterion9() {
  Verdict v;
  for (const char* s : {"boolean:2", "boolean:3", "complete:1,2,2,1"}) {
    auto report = koszul_check(build(s), 4);
    v.require(report.pass, std::string(s) + " fails the identity");
  }
  auto diamond = koszul_check(build("boolean:2"), 4);
  v.require(diamond.dual_series == series({1, 3, 1, 0, 0}), "diamond dual is " + to_human(diamond.dual_series));
  v.require(diamond.dual_series == koszul_dual_series(diamond.algebra_series), "diamond dual is not 1/H(-t)");
  v.note("identity holds to order 4; diamond dual 1 + 3*t + t^2");
  return v;
}

Verdict criterion10() {
  Verdict v;
  std::string report;
  for (const char* s : {"boolean:2", "boolean:3"}) {
    auto cmp = compare_dual_presentations(build(s), 3);
    v.require(cmp.all_cubes_zero, std::string(s) + ": some cube is nonzero");
    report += std::string(report.empty() ? "" : "; ") + s + " B1=" + std::to_string(cmp.presentation_dims[1]) +
              " A!1=" + std::to_string(cmp.dual_dims[1]) + " B2=" + std::to_string(cmp.presentation_dims[2]) +
              " A!2=" + std::to_string(cmp.dual_dims[2]);
  }
  v.note("v^3 = 0 for every vertex; " + report);
  return v;
}

Verdict criterion11() {
  Verdict v;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto sys = random_generic_roots(3, 3, seed);
    std::vector<int> order{1, 2, 3};
    const auto reference = factorization_from_ordering(sys, order).product;
    do {
      v.require(factorization_from_ordering(sys, order).product == reference,
                "seed " + std::to_string(seed) + ": orderings disagree");
    } while (std::next_permutation(order.begin(), order.end()));
    for (int i = 1; i <= 3; ++i) {
      v.require(reference.right_evaluate(sys.root(i)).is_zero(), "seed " + std::to_string(seed) + ": P(x_i) != 0");
    }
    for (const auto& c : check_all_relations_11(sys)) {
      v.require(c.sum_holds && c.product_holds, "seed " + std::to_string(seed) + ": relations fail");
    }
  }
  // Two roots: both orderings give t^2 - (x_{1,2} + x_1) t + x_{1,2} x_1, with
  // x_{2,1} = (x_1 - x_2) x_1 (x_1 - x_2)^{-1}.
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto sys = random_generic_roots(2, 3, seed);
    const Matrix &x1 = sys.root(1), &x2 = sys.root(2);
    const Matrix d12 = x2 - x1, d21 = x1 - x2;
    const Matrix x12 = d12 * x2 * *d12.inverse();
    const Matrix x21 = d21 * x1 * *d21.inverse();
    v.require(pseudo_root(sys, {1}, 2) == x12 && pseudo_root(sys, {2}, 1) == x21, "n=2 pseudo-roots");
    v.require(x12 + x1 == x21 + x2 && x12 * x1 == x21 * x2, "n=2 relations");
    const auto c = factorization_from_ordering(sys, {2, 1}).product.coefficients();
    v.require(c[1] == -(x12 + x1) && c[2] == x12 * x1, "n=2 expansion");
  }
  v.note("20 seeded 3x3 systems; n=2 identities exact");
  return v;
}

Verdict criterion12() {
  Verdict v;
  auto g2 = build("boolean:2");
  auto g3 = build("boolean:3");
  using L = std::vector<std::string>;
  auto expect = [&](const LayeredGraph& g, int n, const L& items, bool sufficient) {
    bool got = is_sufficient(g, gralg::test::labels(g, n, items)).has_value();
    std::string name;
    for (const auto& s : items) name += (name.empty() ? "" : ",") + s;
    v.require(got == sufficient, name + (sufficient ? " should be sufficient" : " should not be sufficient"));
  };
  for (const L& s : {L{"1:2", ":1"}, L{"2:1", ":2"}, L{":1", ":2"}, L{"1:2", "2:1"}}) expect(g2, 2, s, true);
  for (const L& s : {L{"1:2", ":2"}, L{"2:1", ":1"}}) expect(g2, 2, s, false);
  expect(g3, 3, {":1", ":2", ":3"}, true);
  expect(g3, 3, {"1:2", "2:1", "1:3"}, true);
  expect(g3, 3, {"1:2", "2:1", ":3"}, true);
  expect(g3, 3, {"1:3", "1:2", ":1"}, true);
  expect(g3, 3, {"12:3", "3:2", ":1"}, false);
  for (int n = 1; n <= 5; ++n) {
    auto g = build_graph(GraphSpec::boolean(n));
    EdgeSet bottom, top;
    for (int k = 1; k <= n; ++k) {
      bottom.insert(edge_for_pseudoroot(g, n, {{}, k}));
      std::vector<int> rest;
      for (int j = 1; j <= n; ++j) {
        if (j != k) rest.push_back(j);
      }
      top.insert(edge_for_pseudoroot(g, n, {rest, k}));
    }
    v.require(is_sufficient(g, bottom).has_value(), "bottom family n=" + std::to_string(n));
    v.require(is_sufficient(g, top).has_value(), "top family n=" + std::to_string(n));
  }
  v.note("11 worked verdicts and both families for n<=5 reproduced");
  return v;
}

Verdict criterion13() {
  Verdict v;
  std::size_t repeated = 0;
  for (const auto& row : exhaustive_table(build("boolean:3"), 3)) {
    if (row.distinct_i) continue;
    repeated += row.total;
    v.require(row.sufficient == 0, std::to_string(row.sufficient) + " repeated-i sets are sufficient");
  }
  v.note(std::to_string(repeated) + " repeated-i sets, none sufficient");
  return v;
}

Verdict criterion14() {
  Verdict v;
  auto g = build("boolean:4");
  auto distinct = [&](const EdgeSet& s) {
    std::set<int> seen;
    for (EdgeIndex e : s) {
      if (!seen.insert(label_for_edge(g, e).i).second) return false;
    }
    return true;
  };
  std::set<EdgeSet> unique;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto s = random_ample_connected(g, 4, seed, distinct);
    unique.insert(s);
    v.require(is_sufficient(g, s).has_value(), "seed " + std::to_string(seed) + " not sufficient");
  }
  for (int n = 1; n <= 5; ++n) {
    v.require(is_modular(build_graph(GraphSpec::boolean(n))).modular, "boolean:" + std::to_string(n) + " not modular");
  }
  v.note("100 samples (" + std::to_string(unique.size()) + " distinct) sufficient; boolean n<=5 modular");
  return v;
}

Verdict criterion15() {
  Verdict v;
  const std::vector<std::vector<std::string>> calls = {
      {"graph", "--spec", "boolean:3", "--check", "valid,uniform,modular,dump"},
      {"hilbert", "--spec", "subspace:3,2", "--order", "6", "--method", "all"},
      {"hilbert", "--spec", "complete:1,1,1,1", "--order", "5", "--method", "all", "--format", "json"},
      {"basis", "--spec", "boolean:2", "--degree", "2"},
      {"dual", "--spec", "boolean:2", "--order", "4"},
      {"koszul", "--spec", "complete:1,2,2,1", "--order", "4"},
      {"vieta", "--n", "3", "--dim", "3", "--seed", "7"},
      {"vieta", "--n", "2", "--seed", "7", "--format", "json"},
      {"sufficient", "--spec", "boolean:3", "--edges", "1:2,2:1,1:3"},
      {"sufficient", "--spec", "boolean:3", "--edges", "12:3,3:2,:1", "--format", "csv"},
      {"sufficient", "--spec", "boolean:3", "--exhaustive"},
      {"closure", "--spec", "boolean:3", "--edges", "1:2,2:1,1:3"},
  };
  for (const auto& args : calls) {
    std::ostringstream out1, err1, out2, err2;
    int c1 = cli::run(args, out1, err1);
    int c2 = cli::run(args, out2, err2);
    v.require(c1 == 0 && c2 == 0, args[0] + " exited nonzero");
    v.require(out1.str() == out2.str() && err1.str() == err2.str(), args[0] + " output differs between runs");
  }
  v.note(std::to_string(calls.size()) + " invocations byte-identical across two runs");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::function<Verdict()>> criteria = {
      criterion1,  criterion2,  criterion3,  criterion4,  criterion5,  criterion6,  criterion7, criterion8,
      criterion9,  criterion10, criterion11, criterion12, criterion13, criterion14, criterion15,
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << (i + 1) << ": " << (v.pass ? "PASS" : "FAIL") << " (" << timing << ") "
              << v.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}

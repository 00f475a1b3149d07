#include "gralg/hilbert.hpp"

#include <algorithm>

#include "gralg/error.hpp"

namespace gralg {

namespace {

void require_star(const LayeredGraph& graph) {
  if (!graph.star()) throw Error("Hilbert series needs a unique level-0 vertex");
}

void require_order(int order) {
  if (order < 0) throw Error("series order must be >= 0");
}

// For each v, the vertices strictly below it (v > w), in canonical order.
std::vector<std::vector<VertexIndex>> strict_descendants(const LayeredGraph& graph) {
  std::vector<std::vector<VertexIndex>> below(graph.vertex_count());
  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
    for (VertexIndex w = 0; w < graph.vertex_count(); ++w) {
      if (graph.reaches(v, w)) below[v].push_back(w);
    }
  }
  return below;
}

}  // namespace

ZetaMatrix zeta_matrix(const LayeredGraph& graph) {
  const std::size_t n = graph.vertex_count();
  ZetaMatrix z{std::vector<std::vector<int>>(n, std::vector<int>(n, -1))};
  for (VertexIndex v = 0; v < n; ++v) {
    z.exponent[v][v] = 0;
    for (VertexIndex w = 0; w < n; ++w) {
      if (graph.reaches(v, w)) z.exponent[v][w] = graph.level(v) - graph.level(w);
    }
  }
  return z;
}

IntMatrix zeta_at_one(const LayeredGraph& graph) {
  const auto z = zeta_matrix(graph);
  IntMatrix m(z.size(), std::vector<BigInt>(z.size(), 0));
  for (std::size_t v = 0; v < z.size(); ++v) {
    for (std::size_t w = 0; w < z.size(); ++w) {
      if (z.nonzero(v, w)) m[v][w] = 1;
    }
  }
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b.front().size();
  IntMatrix c(n, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < a[i].size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

IntMatrix mobius_matrix(const LayeredGraph& graph) {
  const std::size_t n = graph.vertex_count();
  // minus_strict = -(zeta(1) - I); nilpotent because the order is strict.
  IntMatrix minus_strict(n, std::vector<BigInt>(n, 0));
  for (VertexIndex v = 0; v < n; ++v) {
    for (VertexIndex w = 0; w < n; ++w) {
      if (graph.reaches(v, w)) minus_strict[v][w] = -1;
    }
  }
  IntMatrix sum(n, std::vector<BigInt>(n, 0));
  IntMatrix power(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  for (std::size_t step = 0; step <= n; ++step) {
    bool zero = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (power[i][j] != 0) {
          sum[i][j] += power[i][j];
          zero = false;
        }
      }
    }
    if (zero) break;
    power = multiply(power, minus_strict);
  }
  return sum;
}

TruncatedSeries zeta_denominator(const LayeredGraph& graph, int order) {
  require_order(order);
  require_star(graph);
  const std::size_t n = graph.vertex_count();
  const auto below = strict_descendants(graph);

  // x = zeta(t)^{-1} 1 = sum_k (-N)^k 1, with N the strictly upper part of zeta(t).
  std::vector<TruncatedSeries> term(n, TruncatedSeries::one(order));
  std::vector<TruncatedSeries> x = term;
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<TruncatedSeries> next(n, TruncatedSeries(order));
    bool all_zero = true;
    for (VertexIndex v = 0; v < n; ++v) {
      for (VertexIndex w : below[v]) {
        const int shift = graph.level(v) - graph.level(w);
        if (shift > order || term[w].is_zero()) continue;
        for (int d = 0; d + shift <= order; ++d) {
          if (term[w][d] != 0) next[v][d + shift] -= term[w][d];
        }
      }
      if (!next[v].is_zero()) all_zero = false;
    }
    if (all_zero) break;
    for (VertexIndex v = 0; v < n; ++v) x[v] += next[v];
    term = std::move(next);
  }

  TruncatedSeries total(order);
  for (const auto& s : x) total += s;
  return TruncatedSeries::one(order) - TruncatedSeries::monomial(order, 1, 1) * total;
}

BigInt chain_count(const LayeredGraph& graph) {
  const std::size_t n = graph.vertex_count();
  const auto below = strict_descendants(graph);
  // Chains starting at v; vertices below v have larger indices.
  std::vector<BigInt> starting(n, 0);
  BigInt total = 0;
  for (std::size_t v = n; v-- > 0;) {
    starting[v] = 1;
    for (VertexIndex w : below[v]) starting[v] += starting[w];
    total += starting[v];
  }
  return total;
}

TruncatedSeries chain_denominator(const LayeredGraph& graph, int order, const HilbertOptions& options) {
  require_order(order);
  require_star(graph);
  const BigInt chains = chain_count(graph);
  if (chains > options.chain_budget) {
    throw BudgetExceeded("chain enumeration needs " + chains.get_str() + " chains, budget is " +
                         options.chain_budget.get_str());
  }
  const std::size_t n = graph.vertex_count();
  const auto below = strict_descendants(graph);
  // tally[v] = sum over chains v = v1 > ... > vl of (-1)^l t^(|v1| - |vl|).
  std::vector<TruncatedSeries> tally(n, TruncatedSeries(order));
  TruncatedSeries total(order);
  for (std::size_t v = n; v-- > 0;) {
    auto& f = tally[v];
    f[0] = -1;
    for (VertexIndex w : below[v]) {
      const int shift = graph.level(v) - graph.level(w);
      for (int d = 0; d + shift <= order; ++d) {
        if (tally[w][d] != 0) f[d + shift] -= tally[w][d];
      }
    }
    total += f;
  }
  return TruncatedSeries::one(order) + TruncatedSeries::monomial(order, 1, 1) * total;
}

std::vector<Letter> alphabet(const LayeredGraph& graph) {
  std::vector<Letter> letters;
  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
    for (int k = 1; k <= graph.level(v); ++k) letters.push_back({v, k});
  }
  return letters;
}

int BasisWord::degree() const {
  int d = 0;
  for (const auto& l : letters) d += l.k;
  return d;
}

namespace {

// For each vertex u, the alphabet positions of letters (v, |v| - |u|) with v > u,
// i.e. exactly the letters that may not precede a letter at u.
std::vector<std::vector<std::size_t>> coverers_by_vertex(const LayeredGraph& graph,
                                                         const std::vector<Letter>& letters) {
  std::vector<std::vector<std::size_t>> out(graph.vertex_count());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Letter& a = letters[i];
    for (VertexIndex u = 0; u < graph.vertex_count(); ++u) {
      if (graph.level(u) > 0 && a.k == graph.level(a.vertex) - graph.level(u) && graph.reaches(a.vertex, u)) {
        out[u].push_back(i);
      }
    }
  }
  return out;
}

TruncatedSeries basis_count_series(const LayeredGraph& graph, int order) {
  const auto letters = alphabet(graph);
  const auto coverers = coverers_by_vertex(graph, letters);
  const std::size_t L = letters.size();
  // ending[d][b]: number of normal words of degree d ending in letter b.
  std::vector<std::vector<BigInt>> ending(static_cast<std::size_t>(order) + 1, std::vector<BigInt>(L, 0));
  std::vector<BigInt> nonempty(static_cast<std::size_t>(order) + 1, 0);
  for (int d = 1; d <= order; ++d) {
    for (std::size_t b = 0; b < L; ++b) {
      const int k = letters[b].k;
      if (k > d) continue;
      BigInt count = 0;
      if (k == d) {
        count = 1;
      } else {
        count = nonempty[d - k];
        for (std::size_t a : coverers[letters[b].vertex]) count -= ending[d - k][a];
      }
      ending[d][b] = count;
      nonempty[d] += count;
    }
  }
  TruncatedSeries s(order);
  s[0] = 1;
  for (int d = 1; d <= order; ++d) s[d] = Rational(nonempty[d]);
  return s;
}

}  // namespace

TruncatedSeries hilbert_series(const LayeredGraph& graph, int order, HilbertMethod method,
                               const HilbertOptions& options) {
  require_order(order);
  require_star(graph);
  const TruncatedSeries one_minus_t = TruncatedSeries::polynomial(order, {Rational(1), Rational(-1)});
  switch (method) {
    case HilbertMethod::zeta:
      return divide(one_minus_t, zeta_denominator(graph, order));
    case HilbertMethod::chains:
      return divide(one_minus_t, chain_denominator(graph, order, options));
    case HilbertMethod::basis:
      return basis_count_series(graph, order);
  }
  throw Error("unknown Hilbert method");
}

std::vector<BasisWord> basis_words(const LayeredGraph& graph, int degree, std::size_t cap) {
  if (degree < 0) throw Error("degree must be >= 0");
  const auto letters = alphabet(graph);
  std::vector<BasisWord> out;
  BasisWord current;
  // Depth-first in alphabet order yields lexicographic order.
  auto extend = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      if (out.size() >= cap) {
        throw BudgetExceeded("more than " + std::to_string(cap) + " basis words of degree " +
                             std::to_string(degree));
      }
      out.push_back(current);
      return;
    }
    for (const Letter& b : letters) {
      if (b.k > remaining) continue;
      if (!current.letters.empty() && covers(graph, current.letters.back(), b)) continue;
      current.letters.push_back(b);
      self(self, remaining - b.k);
      current.letters.pop_back();
    }
  };
  extend(extend, degree);
  return out;
}

std::string to_string(const LayeredGraph& graph, const BasisWord& word) {
  if (word.letters.empty()) return "1";
  std::string s;
  for (const auto& l : word.letters) {
    if (!s.empty()) s += " ";
    s += "(" + graph.key(l.vertex) + "," + std::to_string(l.k) + ")";
  }
  return s;
}

}  // namespace gralg

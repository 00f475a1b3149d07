#pragma once

#include <cstddef>
#include <vector>

#include "gralg/graph.hpp"
#include "gralg/rational.hpp"
#include "gralg/series.hpp"

namespace gralg {

/// zeta(t)[v][w] = t^(|v|-|w|) when v >= w, else 0, indexed in canonical vertex order.
struct ZetaMatrix {
  /// Exponent of t per entry, or -1 for a zero entry.
  std::vector<std::vector<int>> exponent;

  std::size_t size() const { return exponent.size(); }
  bool nonzero(std::size_t v, std::size_t w) const { return exponent[v][w] >= 0; }
};

using IntMatrix = std::vector<std::vector<BigInt>>;

ZetaMatrix zeta_matrix(const LayeredGraph& graph);
/// zeta(1) as an integer 0/1 matrix.
IntMatrix zeta_at_one(const LayeredGraph& graph);
/// Inverse of zeta(1) computed as the finite Neumann sum of the strictly upper part.
IntMatrix mobius_matrix(const LayeredGraph& graph);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

enum class HilbertMethod { zeta, chains, basis };

struct HilbertOptions {
  /// Upper bound on the number of strict chains the chain method may sum over.
  BigInt chain_budget = 10000000;
};

/// Hilbert series of A(graph) to the given order. Requires a unique level-0 vertex.
TruncatedSeries hilbert_series(const LayeredGraph& graph, int order, HilbertMethod method,
                               const HilbertOptions& options = {});

/// 1 - t * 1^T zeta(t)^{-1} 1, the denominator of the zeta method (without the (1 - t) factor).
TruncatedSeries zeta_denominator(const LayeredGraph& graph, int order);
/// 1 + sum over strict chains v1 > ... > vl of (-1)^l t^(|v1|-|vl|+1).
TruncatedSeries chain_denominator(const LayeredGraph& graph, int order, const HilbertOptions& options = {});
/// Number of strict chains of length >= 1 in the vertex poset.
BigInt chain_count(const LayeredGraph& graph);

/// Letters (v, k), v of positive level, 1 <= k <= |v|, ordered by vertex then k.
std::vector<Letter> alphabet(const LayeredGraph& graph);

struct BasisWord {
  std::vector<Letter> letters;

  int degree() const;
  friend bool operator==(const BasisWord&, const BasisWord&) = default;
};

/// All normal words of the given degree, in lexicographic order over alphabet().
/// Throws BudgetExceeded when more than cap words exist.
std::vector<BasisWord> basis_words(const LayeredGraph& graph, int degree, std::size_t cap = 1000000);

std::string to_string(const LayeredGraph& graph, const BasisWord& word);

}  // namespace gralg

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gralg/matrix.hpp"

namespace gralg {

/// Sorted set of 1-based root indices.
using IndexSet = std::vector<int>;

/// Monic polynomial in a central variable t with d x d matrix coefficients,
/// stored degree-descending: a_0 = I, a_1, ..., a_n.
class RingPolynomial {
 public:
  /// The constant polynomial 1.
  explicit RingPolynomial(std::size_t dim);
  /// t - root.
  static RingPolynomial linear(const Matrix& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& coefficients() const { return coeffs_; }

  /// a_0 x^n + a_1 x^(n-1) + ... + a_n.
  Matrix right_evaluate(const Matrix& x) const;

  friend RingPolynomial operator*(const RingPolynomial& a, const RingPolynomial& b);
  friend bool operator==(const RingPolynomial&, const RingPolynomial&) = default;

 private:
  std::size_t dim_;
  std::vector<Matrix> coeffs_;
};

/// Roots x_1..x_n (1-based) that passed the genericity certificate: for every
/// subset of size >= 2 the block Vandermonde matrix is invertible and so is every
/// d x d block of its inverse.
class RootSystem {
 public:
  /// Throws gralg::Error naming the first failing subset.
  static RootSystem certify(std::vector<Matrix> roots);

  int size() const { return static_cast<int>(roots_.size()); }
  std::size_t dim() const { return roots_.front().rows(); }
  const Matrix& root(int i) const { return roots_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<Matrix>& roots() const { return roots_; }
  /// Subsets covered by the certificate, in increasing size then lexicographic order.
  const std::vector<IndexSet>& certified() const { return certified_; }

 private:
  std::vector<Matrix> roots_;
  std::vector<IndexSet> certified_;
};

/// Reason the roots fail the genericity certificate, or nullopt when they pass.
std::optional<std::string> genericity_failure(const std::vector<Matrix>& roots);

/// v(x_1..x_k) = x_k^(k-1) - r M^{-1} c, where M has block (m, l) = x_l^m over the
/// first k-1 points, r = (x_1^(k-1), ..., x_(k-1)^(k-1)), c = (1, x_k, ..., x_k^(k-2)).
/// Requires k >= 2.
Matrix vandermonde_quasidet(const std::vector<Matrix>& xs);

/// x_{A,i} = v x_i v^{-1} with v = v(x_A..., x_i); x_{{},i} = x_i.
Matrix pseudo_root(const RootSystem& system, const IndexSet& a, int i);

/// "12:3" for A = {1,2}, i = 3; ":1" for A empty.
std::string pseudo_root_label(const IndexSet& a, int i);

struct Factorization {
  std::vector<int> ordering;
  /// x_{A_0,i_1}, ..., x_{A_{n-1},i_n}.
  std::vector<Matrix> pseudo_roots;
  std::vector<std::string> labels;
  /// (t - x_{A_{n-1},i_n}) ... (t - x_{A_0,i_1}).
  RingPolynomial product;
};

Factorization factorization_from_ordering(const RootSystem& system, const std::vector<int>& ordering);

struct Relations11Check {
  IndexSet a;
  int i = 0;
  int j = 0;
  bool sum_holds = false;
  bool product_holds = false;
};

/// x_{A+i,j} + x_{A,i} = x_{A+j,i} + x_{A,j} and x_{A+i,j} x_{A,i} = x_{A+j,i} x_{A,j}.
Relations11Check check_relations_11(const RootSystem& system, const IndexSet& a, int i, int j);
/// Every admissible (A, i, j) with i < j.
std::vector<Relations11Check> check_all_relations_11(const RootSystem& system);

enum class DuMode { u, d };

/// u: (a - b) a (a - b)^{-1}; d: (a - b)^{-1} a (a - b). Throws when a - b is singular.
Matrix du_numeric(const Matrix& a, const Matrix& b, DuMode mode);

struct SamplingOptions {
  int entry_range = 5;
  int attempts = 1000;
};

/// Rejection sampling of integer matrices with entries in [-range, range], seeded
/// with mt19937_64, until the genericity certificate holds.
RootSystem random_generic_roots(int n, std::size_t dim, std::uint64_t seed, const SamplingOptions& options = {});

}  // namespace gralg

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gralg/graph.hpp"
#include "gralg/rational.hpp"
#include "gralg/series.hpp"
#include "gralg/sparse_echelon.hpp"

namespace gralg {

enum class Alphabet { edge, vertex };

using Word = std::vector<std::size_t>;

/// Homogeneous noncommutative polynomial over edge or vertex indices.
/// Terms are kept in word order and zero coefficients are dropped.
class FormalSum {
 public:
  explicit FormalSum(Alphabet alphabet) : alphabet_(alphabet) {}
  static FormalSum unit(Alphabet alphabet);
  static FormalSum letter(Alphabet alphabet, std::size_t id, const Rational& coefficient = 1);

  Alphabet alphabet() const { return alphabet_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Word& word, const Rational& coefficient);

  FormalSum& operator+=(const FormalSum& other);
  FormalSum& operator-=(const FormalSum& other);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  /// Concatenation product.
  friend FormalSum operator*(const FormalSum& a, const FormalSum& b);
  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  Alphabet alphabet_;
  std::map<Word, Rational> terms_;
};

/// "2*{12}*{1} - {1}*{1}" style rendering with vertex keys or edge labels.
std::string to_string(const LayeredGraph& graph, const FormalSum& sum);

/// k-th elementary symmetric sum of the path's edges, order preserved.
FormalSum esym_path(const LayeredGraph& graph, const Path& path, int k);

/// Image of the k-th elementary symmetric sum under e -> t(e) - h(e), with the
/// level-0 vertex read as 0. Requires 1 <= k <= min(i, length).
FormalSum theta_esym(const LayeredGraph& graph, const Path& path, int i, int k);

/// Degree-2 relation space on the generators (vertex indices) in RREF, flattened
/// so that the word (u, v) sits at column pos(u) * g + pos(v).
struct RelationSpace {
  std::vector<VertexIndex> generators;
  std::vector<std::vector<Rational>> rows;

  std::size_t generator_count() const { return generators.size(); }
  std::size_t rank() const { return rows.size(); }
  friend bool operator==(const RelationSpace&, const RelationSpace&) = default;
};

/// Row-reduced span of the given sparse vectors over g^2 coordinates.
RelationSpace make_relation_space(std::vector<VertexIndex> generators, const std::vector<SparseVector>& vectors);
std::vector<SparseVector> sparse_rows(const RelationSpace& rel);

enum class RelationMode { path_pairs, uniform_shortcut };

struct RelationOptions {
  /// Maximum number of paths (of length >= 2) enumerated in path-pairs mode.
  std::size_t path_budget = 1000000;
  /// Longest path length used in path-pairs mode; 0 means no limit.
  int max_length = 0;
};

/// Quadratic relations of A(2, graph) on the positive-level vertices.
RelationSpace relations_quadratic(const LayeredGraph& graph, RelationMode mode, const RelationOptions& options = {});

/// Orthogonal complement under the standard pairing of the coordinates.
RelationSpace dual_space(const RelationSpace& rel);

/// Relations i) uv = 0 off edges, ii) v^2 + v * sum of children, iii) v^2 + (sum of
/// parents) * v, on all vertices including the level-0 one.
RelationSpace dual_presentation(const LayeredGraph& graph);

struct QuadraticOptions {
  /// Largest column count dim(A_{k-1}) * g (at most g^k) a degree-k step may use.
  std::uint64_t coordinate_cap = 5000000;
};

/// T(W) / <L> built degree by degree. Degree k is presented as the quotient of
/// A_{k-1} (x) W by the images of s (x) l for standard monomials s of degree k-2
/// and l in L; the non-pivot columns form the standard monomials of degree k.
class QuadraticAlgebra {
 public:
  QuadraticAlgebra(std::size_t generators, std::vector<SparseVector> relations, QuadraticOptions options = {});

  std::size_t generator_count() const { return g_; }
  std::size_t dimension(int k);
  /// Coordinates of the word (generator positions) on the standard monomials of its degree.
  SparseVector normal_form(const Word& word);

 private:
  struct Degree {
    std::size_t size = 0;
    /// For each column s * g + u of S_{k-1} x W, its normal form over S_k.
    std::vector<SparseVector> nf;
  };

  void extend_to(int k);

  std::size_t g_;
  std::vector<SparseVector> relations_;
  QuadraticOptions options_;
  std::vector<Degree> degrees_;
};

enum class AlgebraSide { algebra, dual };

std::size_t graded_dim(const RelationSpace& rel, int k, AlgebraSide side, const QuadraticOptions& options = {});
/// Dimensions for degrees 0..max_degree.
std::vector<std::size_t> graded_dims(const RelationSpace& rel, int max_degree, AlgebraSide side,
                                     const QuadraticOptions& options = {});

struct KoszulDegree {
  int degree = 0;
  std::size_t algebra = 0;
  std::size_t dual = 0;
  Rational engine;
  /// Coefficient of H(A,t) H(A!,-t) in this degree.
  Rational product;
  bool engine_match = false;
  bool identity_holds = false;
};

struct KoszulReport {
  TruncatedSeries algebra_series;
  TruncatedSeries dual_series;
  TruncatedSeries engine_series;
  TruncatedSeries product;
  std::vector<KoszulDegree> degrees;
  bool uniform = false;
  bool engine_agrees = false;
  /// Product identity holds in every degree, and the algebra side matches the
  /// engine whenever the graph is uniform.
  bool pass = false;
};

struct KoszulOptions {
  RelationOptions relations;
  QuadraticOptions quadratic;
};

KoszulReport koszul_check(const LayeredGraph& graph, int order, const KoszulOptions& options = {});

struct DualComparison {
  /// dim B_k on all vertices, k = 0..max_degree.
  std::vector<std::size_t> presentation_dims;
  /// dim A!_k on positive vertices, k = 0..max_degree.
  std::vector<std::size_t> dual_dims;
  /// (vertex, v^3 == 0 in B).
  std::vector<std::pair<VertexIndex, bool>> cube_zero;
  bool all_cubes_zero = false;
};

/// Needs max_degree >= 3 for the cube check.
DualComparison compare_dual_presentations(const LayeredGraph& graph, int max_degree = 3,
                                          const KoszulOptions& options = {});

/// {"generators":[keys...],"rows":[["p/q",...],...]}
std::string to_json(const LayeredGraph& graph, const RelationSpace& rel);
RelationSpace relation_space_from_json(const LayeredGraph& graph, std::string_view text);

}  // namespace gralg

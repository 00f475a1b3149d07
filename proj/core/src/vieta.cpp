#include "gralg/vieta.hpp"

#include <algorithm>
#include <random>

#include "gralg/error.hpp"

namespace gralg {

RingPolynomial::RingPolynomial(std::size_t dim) : dim_(dim), coeffs_{Matrix::identity(dim)} {}

RingPolynomial RingPolynomial::linear(const Matrix& root) {
  if (!root.is_square()) throw Error("polynomial coefficients must be square");
  RingPolynomial p(root.rows());
  p.coeffs_.push_back(-root);
  return p;
}

Matrix RingPolynomial::right_evaluate(const Matrix& x) const {
  if (x.rows() != dim_ || x.cols() != dim_) throw Error("evaluation point has the wrong dimension");
  // Horner from the right: a_n + (a_(n-1) + (...) x) x.
  Matrix acc = coeffs_.front();
  for (std::size_t i = 1; i < coeffs_.size(); ++i) acc = acc * x + coeffs_[i];
  return acc;
}

RingPolynomial operator*(const RingPolynomial& a, const RingPolynomial& b) {
  if (a.dim_ != b.dim_) throw Error("polynomial dimensions differ");
  RingPolynomial out(a.dim_);
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Matrix::zero(a.dim_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

namespace {

std::string set_label(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(s[k]);
  }
  return out + "}";
}

// Block matrix with block (row, col) = points[rows_are_powers ? col : row]^(power).
Matrix block_vandermonde(const std::vector<Matrix>& points, bool rows_are_powers) {
  const std::size_t k = points.size();
  const std::size_t d = points.front().rows();
  Matrix m(k * d, k * d);
  for (std::size_t l = 0; l < k; ++l) {
    Matrix power = Matrix::identity(d);
    for (std::size_t p = 0; p < k; ++p) {
      if (rows_are_powers) {
        m.set_block(p * d, l * d, power);
      } else {
        m.set_block(l * d, p * d, power);
      }
      power = power * points[l];
    }
  }
  return m;
}

bool inverse_blocks_invertible(const Matrix& inv, std::size_t k, std::size_t d) {
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      if (!inv.block(r * d, c * d, d, d).is_invertible()) return false;
    }
  }
  return true;
}

std::vector<IndexSet> subsets_of_size_at_least_two(int n) {
  std::vector<IndexSet> out;
  for (int size = 2; size <= n; ++size) {
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      IndexSet s;
      for (int i = 0; i < n; ++i) {
        if (pick[static_cast<std::size_t>(i)]) s.push_back(i + 1);
      }
      out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

void check_index(const RootSystem& system, int i) {
  if (i < 1 || i > system.size()) throw Error("root index " + std::to_string(i) + " out of range");
}

IndexSet normalized(IndexSet a, const RootSystem& system) {
  std::sort(a.begin(), a.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw Error("index set has repeated entries");
  for (int i : a) check_index(system, i);
  return a;
}

IndexSet with(IndexSet a, int i) {
  a.insert(std::upper_bound(a.begin(), a.end(), i), i);
  return a;
}

}  // namespace

std::optional<std::string> genericity_failure(const std::vector<Matrix>& roots) {
  if (roots.empty()) return "no roots";
  const std::size_t d = roots.front().rows();
  for (const auto& x : roots) {
    if (!x.is_square() || x.rows() != d) return "roots must be square matrices of one dimension";
  }
  for (const auto& s : subsets_of_size_at_least_two(static_cast<int>(roots.size()))) {
    std::vector<Matrix> points;
    for (int i : s) points.push_back(roots[static_cast<std::size_t>(i - 1)]);
    // Both orientations: the literal points-by-powers matrix and the
    // powers-by-points matrix used by the quasideterminant.
    for (bool rows_are_powers : {false, true}) {
      const auto inv = block_vandermonde(points, rows_are_powers).inverse();
      if (!inv) return "Vandermonde matrix of " + set_label(s) + " is singular";
      if (!inverse_blocks_invertible(*inv, s.size(), d)) {
        return "inverse Vandermonde matrix of " + set_label(s) + " has a singular block";
      }
    }
  }
  return std::nullopt;
}

RootSystem RootSystem::certify(std::vector<Matrix> roots) {
  if (auto failure = genericity_failure(roots)) throw Error("roots are not generic: " + *failure);
  RootSystem s;
  s.certified_ = subsets_of_size_at_least_two(static_cast<int>(roots.size()));
  s.roots_ = std::move(roots);
  return s;
}

Matrix vandermonde_quasidet(const std::vector<Matrix>& xs) {
  const std::size_t k = xs.size();
  if (k < 2) throw Error("Vandermonde quasideterminant needs at least two points");
  const std::size_t d = xs.front().rows();
  const std::vector<Matrix> head(xs.begin(), xs.end() - 1);
  const auto inv = block_vandermonde(head, true).inverse();
  if (!inv) throw Error("block Vandermonde matrix is singular");
  const std::size_t m = k - 1;
  Matrix r(d, m * d);
  for (std::size_t l = 0; l < m; ++l) r.set_block(0, l * d, head[l].power(static_cast<unsigned>(m)));
  Matrix c(m * d, d);
  for (std::size_t p = 0; p < m; ++p) c.set_block(p * d, 0, xs.back().power(static_cast<unsigned>(p)));
  return xs.back().power(static_cast<unsigned>(m)) - r * *inv * c;
}

Matrix pseudo_root(const RootSystem& system, const IndexSet& a, int i) {
  check_index(system, i);
  const IndexSet s = normalized(a, system);
  if (std::binary_search(s.begin(), s.end(), i)) throw Error("pseudo-root index must not lie in its set");
  if (s.empty()) return system.root(i);
  std::vector<Matrix> xs;
  for (int j : s) xs.push_back(system.root(j));
  xs.push_back(system.root(i));
  const Matrix v = vandermonde_quasidet(xs);
  const auto v_inv = v.inverse();
  if (!v_inv) throw Error("quasideterminant for " + pseudo_root_label(s, i) + " is singular");
  return v * system.root(i) * *v_inv;
}

std::string pseudo_root_label(const IndexSet& a, int i) {
  std::string out;
  for (int j : a) out += std::to_string(j) + (a.back() >= 10 ? "," : "");
  if (!out.empty() && out.back() == ',') out.pop_back();
  return out + ":" + std::to_string(i);
}

Factorization factorization_from_ordering(const RootSystem& system, const std::vector<int>& ordering) {
  std::vector<int> sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < system.size(); ++k) {
    if (sorted.size() != static_cast<std::size_t>(system.size()) || sorted[static_cast<std::size_t>(k)] != k + 1) {
      throw Error("ordering must be a permutation of 1.." + std::to_string(system.size()));
    }
  }
  Factorization f{ordering, {}, {}, RingPolynomial(system.dim())};
  IndexSet a;
  for (int i : ordering) {
    f.pseudo_roots.push_back(pseudo_root(system, a, i));
    f.labels.push_back(pseudo_root_label(a, i));
    a = with(std::move(a), i);
  }
  for (auto it = f.pseudo_roots.rbegin(); it != f.pseudo_roots.rend(); ++it) {
    f.product = f.product * RingPolynomial::linear(*it);
  }
  return f;
}

Relations11Check check_relations_11(const RootSystem& system, const IndexSet& a, int i, int j) {
  const IndexSet s = normalized(a, system);
  check_index(system, i);
  check_index(system, j);
  if (i == j || std::binary_search(s.begin(), s.end(), i) || std::binary_search(s.begin(), s.end(), j)) {
    throw Error("relations need distinct i, j outside A");
  }
  const Matrix x_ai_j = pseudo_root(system, with(s, i), j);
  const Matrix x_a_i = pseudo_root(system, s, i);
  const Matrix x_aj_i = pseudo_root(system, with(s, j), i);
  const Matrix x_a_j = pseudo_root(system, s, j);
  return {s, i, j, x_ai_j + x_a_i == x_aj_i + x_a_j, x_ai_j * x_a_i == x_aj_i * x_a_j};
}

std::vector<Relations11Check> check_all_relations_11(const RootSystem& system) {
  const int n = system.size();
  std::vector<Relations11Check> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    IndexSet a;
    for (int k = 0; k < n; ++k) {
      if (mask & (1u << k)) a.push_back(k + 1);
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (mask & ((1u << (i - 1)) | (1u << (j - 1)))) continue;
        out.push_back(check_relations_11(system, a, i, j));
      }
    }
  }
  return out;
}

Matrix du_numeric(const Matrix& a, const Matrix& b, DuMode mode) {
  const Matrix diff = a - b;
  const auto inv = diff.inverse();
  if (!inv) throw Error("a - b is singular");
  return mode == DuMode::u ? diff * a * *inv : *inv * a * diff;
}

RootSystem random_generic_roots(int n, std::size_t dim, std::uint64_t seed, const SamplingOptions& options) {
  if (n < 1) throw Error("need at least one root");
  if (dim < 2) throw Error("matrix dimension must be >= 2");
  if (options.entry_range < 1) throw Error("entry range must be >= 1");
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(2 * options.entry_range + 1);
  for (int attempt = 0; attempt < options.attempts; ++attempt) {
    std::vector<Matrix> roots;
    for (int i = 0; i < n; ++i) {
      Matrix x(dim, dim);
      for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
          x(r, c) = static_cast<long>(rng() % span) - options.entry_range;
        }
      }
      roots.push_back(std::move(x));
    }
    if (!genericity_failure(roots)) return RootSystem::certify(std::move(roots));
  }
  throw Error("no generic root system found in " + std::to_string(options.attempts) + " attempts");
}

}  // namespace gralg

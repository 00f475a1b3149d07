#include "gralg/quadratic.hpp"

#include <algorithm>
#include <limits>
#include <json.hpp>

#include "gralg/error.hpp"
#include "gralg/hilbert.hpp"

namespace gralg {

FormalSum FormalSum::unit(Alphabet alphabet) {
  FormalSum s(alphabet);
  s.add({}, 1);
  return s;
}

FormalSum FormalSum::letter(Alphabet alphabet, std::size_t id, const Rational& coefficient) {
  FormalSum s(alphabet);
  s.add({id}, coefficient);
  return s;
}

void FormalSum::add(const Word& word, const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(word, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  if (other.alphabet_ != alphabet_) throw Error("formal sums over different alphabets");
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& other) {
  if (other.alphabet_ != alphabet_) throw Error("formal sums over different alphabets");
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

FormalSum operator*(const FormalSum& a, const FormalSum& b) {
  if (a.alphabet_ != b.alphabet_) throw Error("formal sums over different alphabets");
  FormalSum out(a.alphabet_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

std::string to_string(const LayeredGraph& graph, const FormalSum& sum) {
  if (sum.is_zero()) return "0";
  std::string out;
  for (const auto& [word, c] : sum.terms()) {
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string body;
    for (std::size_t id : word) {
      if (!body.empty()) body += "*";
      body += sum.alphabet() == Alphabet::vertex ? graph.key(id) : graph.edge_label(id);
    }
    if (body.empty()) {
      out += to_plain_string(mag);
    } else {
      if (mag != 1) out += to_plain_string(mag) + "*";
      out += body;
    }
  }
  return out;
}

FormalSum esym_path(const LayeredGraph& graph, const Path& path, int k) {
  path_vertices(graph, path);  // validates the path
  const int m = static_cast<int>(path.size());
  if (k < 0 || k > m) throw Error("elementary symmetric degree out of range");
  // esym[r] over the first j edges; sweep r downwards to reuse the row.
  std::vector<FormalSum> esym(static_cast<std::size_t>(k) + 1, FormalSum(Alphabet::edge));
  esym[0] = FormalSum::unit(Alphabet::edge);
  for (int j = 0; j < m; ++j) {
    const FormalSum e = FormalSum::letter(Alphabet::edge, path[static_cast<std::size_t>(j)]);
    for (int r = std::min(k, j + 1); r >= 1; --r) esym[r] += esym[r - 1] * e;
  }
  return esym[static_cast<std::size_t>(k)];
}

namespace {

FormalSum vertex_or_zero(const LayeredGraph& graph, VertexIndex v) {
  if (graph.level(v) == 0) return FormalSum(Alphabet::vertex);
  return FormalSum::letter(Alphabet::vertex, v);
}

// Elementary symmetric sum of degree k in the differences v_{j-1} - v_j.
FormalSum theta_from_vertices(const LayeredGraph& graph, const std::vector<VertexIndex>& verts, int k) {
  std::vector<FormalSum> esym(static_cast<std::size_t>(k) + 1, FormalSum(Alphabet::vertex));
  esym[0] = FormalSum::unit(Alphabet::vertex);
  for (std::size_t j = 1; j < verts.size(); ++j) {
    const FormalSum d = vertex_or_zero(graph, verts[j - 1]) - vertex_or_zero(graph, verts[j]);
    for (int r = std::min<int>(k, static_cast<int>(j)); r >= 1; --r) esym[r] += esym[r - 1] * d;
  }
  return esym[static_cast<std::size_t>(k)];
}

std::vector<std::size_t> generator_positions(const LayeredGraph& graph, const std::vector<VertexIndex>& generators) {
  std::vector<std::size_t> pos(graph.vertex_count(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < generators.size(); ++i) pos[generators[i]] = i;
  return pos;
}

SparseVector quadratic_coordinates(const FormalSum& sum, const std::vector<std::size_t>& pos, std::size_t g) {
  SparseVector v;
  for (const auto& [word, c] : sum.terms()) {
    if (word.size() != 2) throw Error("relation is not homogeneous of degree 2");
    const std::size_t a = pos.at(word[0]);
    const std::size_t b = pos.at(word[1]);
    if (a >= g || b >= g) throw Error("relation uses a vertex outside the generator list");
    v.emplace_back(static_cast<Column>(a * g + b), c);
  }
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return v;
}

RelationSpace finish(std::vector<VertexIndex> generators, const SparseEchelon& echelon) {
  RelationSpace rel{std::move(generators), {}};
  const std::size_t n = echelon.columns();
  for (const auto& row : echelon.reduced_basis()) {
    std::vector<Rational> dense(n, 0);
    for (const auto& [c, x] : row) dense[c] = x;
    rel.rows.push_back(std::move(dense));
  }
  return rel;
}

std::size_t square_columns(std::size_t g) {
  if (g > 60000) throw BudgetExceeded("too many generators for a degree-2 coordinate system");
  return g * g;
}

}  // namespace

FormalSum theta_esym(const LayeredGraph& graph, const Path& path, int i, int k) {
  const auto verts = path_vertices(graph, path);
  const int m = static_cast<int>(path.size());
  if (k < 1 || k > std::min(i, m)) throw Error("theta degree out of range");
  return theta_from_vertices(graph, verts, k);
}

RelationSpace make_relation_space(std::vector<VertexIndex> generators, const std::vector<SparseVector>& vectors) {
  SparseEchelon echelon(square_columns(generators.size()));
  for (const auto& v : vectors) echelon.insert(v);
  return finish(std::move(generators), echelon);
}

std::vector<SparseVector> sparse_rows(const RelationSpace& rel) {
  std::vector<SparseVector> out;
  out.reserve(rel.rows.size());
  for (const auto& row : rel.rows) {
    SparseVector v;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] != 0) v.emplace_back(static_cast<Column>(c), row[c]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

RelationSpace relations_quadratic(const LayeredGraph& graph, RelationMode mode, const RelationOptions& options) {
  if (!graph.star()) throw Error("quadratic relations need a unique level-0 vertex");
  auto generators = graph.positive_vertices();
  const std::size_t g = generators.size();
  const auto pos = generator_positions(graph, generators);
  SparseEchelon echelon(square_columns(g));

  if (mode == RelationMode::uniform_shortcut) {
    if (!is_uniform(graph).uniform) throw Error("uniform-shortcut relations requested on a non-uniform graph");
    auto x_of = [&](VertexIndex x) { return vertex_or_zero(graph, x); };
    for (VertexIndex v : generators) {
      if (graph.level(v) < 2) continue;
      const auto children = graph.down(v);
      for (VertexIndex u : children) {
        for (VertexIndex w : children) {
          if (u == w) continue;
          for (VertexIndex x : graph.down(u)) {
            if (!graph.find_edge(w, x)) continue;
            const FormalSum V = FormalSum::letter(Alphabet::vertex, v);
            const FormalSum U = x_of(u);
            const FormalSum W = x_of(w);
            const FormalSum r = V * (U - W) - U * U + W * W + (U - W) * x_of(x);
            echelon.insert(quadratic_coordinates(r, pos, g));
          }
        }
      }
    }
    return finish(std::move(generators), echelon);
  }

  std::size_t paths = 0;
  std::vector<VertexIndex> verts;
  std::map<VertexIndex, FormalSum> reference;
  auto dfs = [&](auto&& self) -> void {
    const VertexIndex last = verts.back();
    const int length = static_cast<int>(verts.size()) - 1;
    if (length >= 2) {
      if (++paths > options.path_budget) {
        throw BudgetExceeded("path enumeration exceeded the budget of " + std::to_string(options.path_budget) +
                             " paths");
      }
      FormalSum theta = theta_from_vertices(graph, verts, 2);
      auto [it, inserted] = reference.try_emplace(last, theta);
      if (!inserted) echelon.insert(quadratic_coordinates(theta - it->second, pos, g));
    }
    if (options.max_length > 0 && length >= options.max_length) return;
    for (VertexIndex next : graph.down(last)) {
      verts.push_back(next);
      self(self);
      verts.pop_back();
    }
  };
  for (VertexIndex v : generators) {
    if (graph.level(v) < 2) continue;
    reference.clear();
    verts.assign(1, v);
    dfs(dfs);
  }
  return finish(std::move(generators), echelon);
}

RelationSpace dual_space(const RelationSpace& rel) {
  const std::size_t n = square_columns(rel.generator_count());
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(n, false);
  for (const auto& row : rel.rows) {
    const auto it = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
    const auto p = static_cast<std::size_t>(it - row.begin());
    pivots.push_back(p);
    is_pivot[p] = true;
  }
  std::vector<SparseVector> complement;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    SparseVector v;
    for (std::size_t i = 0; i < rel.rows.size(); ++i) {
      if (rel.rows[i][f] != 0) v.emplace_back(static_cast<Column>(pivots[i]), -rel.rows[i][f]);
    }
    v.emplace_back(static_cast<Column>(f), 1);
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    complement.push_back(std::move(v));
  }
  return make_relation_space(rel.generators, complement);
}

RelationSpace dual_presentation(const LayeredGraph& graph) {
  if (!graph.star()) throw Error("dual presentation needs a unique level-0 vertex");
  const std::size_t n = graph.vertex_count();
  std::vector<VertexIndex> generators(n);
  for (std::size_t i = 0; i < n; ++i) generators[i] = i;
  auto col = [n](std::size_t u, std::size_t v) { return static_cast<Column>(u * n + v); };

  std::vector<SparseVector> vectors;
  for (VertexIndex u = 0; u < n; ++u) {
    for (VertexIndex v = 0; v < n; ++v) {
      if (u != v && !graph.find_edge(u, v)) vectors.push_back({{col(u, v), 1}});
    }
  }
  for (VertexIndex v = 0; v < n; ++v) {
    SparseVector below{{col(v, v), 1}};
    for (VertexIndex w : graph.down(v)) below.emplace_back(col(v, w), 1);
    SparseVector above{{col(v, v), 1}};
    for (VertexIndex u : graph.up(v)) above.emplace_back(col(u, v), 1);
    for (auto* s : {&below, &above}) {
      std::sort(s->begin(), s->end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      vectors.push_back(std::move(*s));
    }
  }
  return make_relation_space(std::move(generators), vectors);
}

QuadraticAlgebra::QuadraticAlgebra(std::size_t generators, std::vector<SparseVector> relations,
                                   QuadraticOptions options)
    : g_(generators), relations_(std::move(relations)), options_(options) {
  const std::size_t n = square_columns(g_);
  for (const auto& r : relations_) {
    for (const auto& [c, x] : r) {
      if (c >= n) throw Error("relation coordinate out of range");
    }
  }
  Degree zero{1, {}};
  Degree one{g_, {}};
  one.nf.reserve(g_);
  for (std::size_t u = 0; u < g_; ++u) one.nf.push_back({{static_cast<Column>(u), 1}});
  degrees_.push_back(std::move(zero));
  degrees_.push_back(std::move(one));
}

void QuadraticAlgebra::extend_to(int k) {
  if (k < 0) throw Error("degree must be >= 0");
  while (static_cast<int>(degrees_.size()) <= k) {
    const int d = static_cast<int>(degrees_.size());
    const Degree& prev = degrees_[static_cast<std::size_t>(d - 1)];
    const Degree& prev2 = degrees_[static_cast<std::size_t>(d - 2)];
    const std::size_t columns = prev.size * g_;
    if (columns > options_.coordinate_cap || columns > std::numeric_limits<Column>::max()) {
      throw BudgetExceeded("degree " + std::to_string(d) + " needs " + std::to_string(columns) +
                           " tensor coordinates, cap is " + std::to_string(options_.coordinate_cap));
    }
    SparseEchelon echelon(columns);
    std::map<Column, Rational> acc;
    for (std::size_t s = 0; s < prev2.size; ++s) {
      for (const auto& rel : relations_) {
        acc.clear();
        for (const auto& [c, coef] : rel) {
          const std::size_t u = c / g_;
          const std::size_t v = c % g_;
          for (const auto& [t, x] : prev.nf[s * g_ + u]) {
            auto slot = acc.try_emplace(static_cast<Column>(t * g_ + v), 0).first;
            slot->second += coef * x;
            if (slot->second == 0) acc.erase(slot);
          }
        }
        if (!acc.empty()) echelon.insert(SparseVector(acc.begin(), acc.end()));
      }
    }

    Degree next;
    std::vector<Column> index(columns, 0);
    for (std::size_t c = 0; c < columns; ++c) {
      if (!echelon.is_pivot(static_cast<Column>(c))) index[c] = static_cast<Column>(next.size++);
    }
    next.nf.resize(columns);
    for (std::size_t c = 0; c < columns; ++c) {
      if (!echelon.is_pivot(static_cast<Column>(c))) next.nf[c] = {{index[c], 1}};
    }
    for (const auto& row : echelon.reduced_basis()) {
      SparseVector& target = next.nf[row.front().first];
      for (std::size_t i = 1; i < row.size(); ++i) target.emplace_back(index[row[i].first], -row[i].second);
    }
    degrees_.push_back(std::move(next));
  }
}

std::size_t QuadraticAlgebra::dimension(int k) {
  extend_to(k);
  return degrees_[static_cast<std::size_t>(k)].size;
}

SparseVector QuadraticAlgebra::normal_form(const Word& word) {
  for (std::size_t u : word) {
    if (u >= g_) throw Error("generator position out of range");
  }
  extend_to(static_cast<int>(word.size()));
  std::map<Column, Rational> cur{{0, 1}};
  for (std::size_t j = 1; j <= word.size(); ++j) {
    const Degree& deg = degrees_[j];
    std::map<Column, Rational> next;
    for (const auto& [s, x] : cur) {
      for (const auto& [t, y] : deg.nf[s * g_ + word[j - 1]]) {
        auto slot = next.try_emplace(t, 0).first;
        slot->second += x * y;
        if (slot->second == 0) next.erase(slot);
      }
    }
    cur = std::move(next);
  }
  return SparseVector(cur.begin(), cur.end());
}

std::vector<std::size_t> graded_dims(const RelationSpace& rel, int max_degree, AlgebraSide side,
                                     const QuadraticOptions& options) {
  if (max_degree < 0) throw Error("degree must be >= 0");
  QuadraticAlgebra algebra(rel.generator_count(),
                           sparse_rows(side == AlgebraSide::algebra ? rel : dual_space(rel)), options);
  std::vector<std::size_t> dims;
  for (int k = 0; k <= max_degree; ++k) dims.push_back(algebra.dimension(k));
  return dims;
}

std::size_t graded_dim(const RelationSpace& rel, int k, AlgebraSide side, const QuadraticOptions& options) {
  return graded_dims(rel, k, side, options).back();
}

KoszulReport koszul_check(const LayeredGraph& graph, int order, const KoszulOptions& options) {
  if (order < 0) throw Error("series order must be >= 0");
  const auto rel = relations_quadratic(graph, RelationMode::path_pairs, options.relations);
  const auto a = graded_dims(rel, order, AlgebraSide::algebra, options.quadratic);
  const auto b = graded_dims(rel, order, AlgebraSide::dual, options.quadratic);

  KoszulReport report;
  report.algebra_series = TruncatedSeries(order);
  report.dual_series = TruncatedSeries(order);
  for (int k = 0; k <= order; ++k) {
    report.algebra_series[k] = static_cast<unsigned long>(a[static_cast<std::size_t>(k)]);
    report.dual_series[k] = static_cast<unsigned long>(b[static_cast<std::size_t>(k)]);
  }
  report.engine_series = hilbert_series(graph, order, HilbertMethod::zeta);
  report.product = report.algebra_series * report.dual_series.negated_argument();
  report.uniform = is_uniform(graph).uniform;
  report.engine_agrees = true;
  bool identity = true;
  for (int k = 0; k <= order; ++k) {
    KoszulDegree row;
    row.degree = k;
    row.algebra = a[static_cast<std::size_t>(k)];
    row.dual = b[static_cast<std::size_t>(k)];
    row.engine = report.engine_series[k];
    row.product = report.product[k];
    row.engine_match = report.algebra_series[k] == row.engine;
    row.identity_holds = row.product == (k == 0 ? 1 : 0);
    report.engine_agrees = report.engine_agrees && row.engine_match;
    identity = identity && row.identity_holds;
    report.degrees.push_back(std::move(row));
  }
  report.pass = identity && (report.engine_agrees || !report.uniform);
  return report;
}

DualComparison compare_dual_presentations(const LayeredGraph& graph, int max_degree, const KoszulOptions& options) {
  if (max_degree < 0) throw Error("degree must be >= 0");
  const auto b = dual_presentation(graph);
  QuadraticAlgebra presentation(b.generator_count(), sparse_rows(b), options.quadratic);
  DualComparison out;
  for (int k = 0; k <= max_degree; ++k) out.presentation_dims.push_back(presentation.dimension(k));
  const auto rel = relations_quadratic(graph, RelationMode::path_pairs, options.relations);
  out.dual_dims = graded_dims(rel, max_degree, AlgebraSide::dual, options.quadratic);
  out.all_cubes_zero = max_degree >= 3;
  if (max_degree >= 3) {
    for (std::size_t p = 0; p < b.generators.size(); ++p) {
      const bool zero = presentation.normal_form({p, p, p}).empty();
      out.cube_zero.emplace_back(b.generators[p], zero);
      out.all_cubes_zero = out.all_cubes_zero && zero;
    }
  }
  return out;
}

std::string to_json(const LayeredGraph& graph, const RelationSpace& rel) {
  nlohmann::ordered_json j;
  j["generators"] = nlohmann::ordered_json::array();
  for (VertexIndex v : rel.generators) j["generators"].push_back(graph.key(v));
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rel.rows) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& x : row) r.push_back(to_fraction_string(x));
    j["rows"].push_back(std::move(r));
  }
  return j.dump();
}

RelationSpace relation_space_from_json(const LayeredGraph& graph, std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("relation space JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("generators") || !j.contains("rows") || j.size() != 2) {
    throw Error("relation space JSON needs exactly the fields generators and rows");
  }
  std::vector<VertexIndex> generators;
  for (const auto& key : j.at("generators")) {
    if (!key.is_string()) throw Error("generator ids must be strings");
    generators.push_back(graph.index_of(key.get<std::string>()));
  }
  const std::size_t n = square_columns(generators.size());
  std::vector<SparseVector> vectors;
  for (const auto& row : j.at("rows")) {
    if (!row.is_array() || row.size() != n) throw Error("relation row has the wrong length");
    SparseVector v;
    for (std::size_t c = 0; c < n; ++c) {
      if (!row[c].is_string()) throw Error("relation entries must be \"p/q\" strings");
      Rational x = parse_fraction(row[c].get<std::string>());
      if (x != 0) v.emplace_back(static_cast<Column>(c), std::move(x));
    }
    vectors.push_back(std::move(v));
  }
  return make_relation_space(std::move(generators), vectors);
}

}  // namespace gralg

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gralg/error.hpp"
#include "gralg/graph.hpp"

namespace gralg {

std::string boolean_key(std::span<const int> elements) {
  bool short_form = std::all_of(elements.begin(), elements.end(), [](int e) { return e >= 0 && e < 10; });
  std::string key = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!short_form && i > 0) key += ",";
    key += std::to_string(elements[i]);
  }
  key += "}";
  return key;
}

namespace {

void check_cap(std::size_t count, const BuildOptions& options, const std::string& what) {
  if (count > options.vertex_cap) {
    throw Error(what + " has " + std::to_string(count) + " vertices, above the cap of " +
                std::to_string(options.vertex_cap));
  }
}

LayeredGraph build_boolean(int n, const BuildOptions& options) {
  if (n < 1) throw Error("boolean graph needs n >= 1");
  if (n > 30) throw Error("boolean graph with n = " + std::to_string(n) + " exceeds the vertex cap");
  const std::size_t count = std::size_t{1} << n;
  check_cap(count, options, "boolean(" + std::to_string(n) + ")");

  std::vector<std::string> keys(count);
  std::vector<Vertex> vertices;
  vertices.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<int> elements;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1U) elements.push_back(i + 1);
    }
    keys[mask] = boolean_key(elements);
    vertices.push_back({keys[mask], static_cast<int>(elements.size())});
  }
  std::vector<EdgeByKey> edges;
  for (std::size_t mask = 0; mask < count; ++mask) {
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1U) edges.push_back({keys[mask], keys[mask & ~(std::size_t{1} << i)]});
    }
  }
  return LayeredGraph::from_parts(std::move(vertices), edges);
}

// Subspaces of F_p^n are stored as their reduced row-echelon basis.
using Row = std::vector<int>;
using Basis = std::vector<Row>;

long mod_inverse(long a, long p) {
  long result = 1;
  long base = a % p;
  long exp = p - 2;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

Basis rref_mod(Basis rows, long p) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    long inv = mod_inverse(rows[rank][c], p);
    for (auto& x : rows[rank]) x = static_cast<int>(x * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      long f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = static_cast<int>(((rows[r][k] - f * rows[rank][k]) % p + p) % p);
      }
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

std::string subspace_key(const Basis& basis, long p) {
  std::string key = "[";
  for (std::size_t r = 0; r < basis.size(); ++r) {
    if (r) key += ",";
    for (std::size_t c = 0; c < basis[r].size(); ++c) {
      if (p >= 10 && c) key += ".";
      key += std::to_string(basis[r][c]);
    }
  }
  key += "]";
  return key;
}

std::size_t subspace_count(int n, long q, std::size_t limit) {
  // Sum of Gaussian binomials via the q-Pascal rule, saturating at limit + 1.
  std::vector<std::vector<double>> table(n + 1, std::vector<double>(n + 1, 0.0));
  for (int a = 0; a <= n; ++a) {
    table[a][0] = 1.0;
    for (int b = 1; b <= a; ++b) {
      table[a][b] = table[a - 1][b - 1] + std::pow(static_cast<double>(q), b) * table[a - 1][b];
    }
  }
  double total = 0.0;
  for (int b = 0; b <= n; ++b) total += table[n][b];
  if (total > static_cast<double>(limit)) return limit + 1;
  return static_cast<std::size_t>(total + 0.5);
}

LayeredGraph build_subspace(int n, long q, const BuildOptions& options) {
  if (n < 1) throw Error("subspace graph needs n >= 1");
  if (!is_prime(q)) throw Error("subspace graph needs a prime field size, got q = " + std::to_string(q));
  const std::string name = "subspace(" + std::to_string(n) + "," + std::to_string(q) + ")";
  check_cap(subspace_count(n, q, options.vertex_cap), options, name);

  std::vector<Row> vectors;
  {
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(q);
    for (std::size_t code = 1; code < total; ++code) {
      Row v(n);
      std::size_t c = code;
      for (int i = n - 1; i >= 0; --i) {
        v[i] = static_cast<int>(c % q);
        c /= q;
      }
      vectors.push_back(std::move(v));
    }
  }

  std::map<std::string, int> level_of;
  std::set<std::pair<std::string, std::string>> edge_set;
  std::vector<Basis> frontier{Basis{}};
  level_of.emplace(subspace_key({}, q), 0);
  for (int dim = 0; dim < n; ++dim) {
    std::map<std::string, Basis> next;
    for (const auto& lower : frontier) {
      const std::string lower_key = subspace_key(lower, q);
      for (const auto& v : vectors) {
        Basis extended = lower;
        extended.push_back(v);
        Basis reduced = rref_mod(std::move(extended), q);
        if (static_cast<int>(reduced.size()) != dim + 1) continue;
        std::string key = subspace_key(reduced, q);
        edge_set.emplace(key, lower_key);
        next.emplace(key, std::move(reduced));
      }
    }
    frontier.clear();
    for (auto& [key, basis] : next) {
      level_of.emplace(key, dim + 1);
      frontier.push_back(std::move(basis));
    }
  }

  std::vector<Vertex> vertices;
  for (const auto& [key, level] : level_of) vertices.push_back({key, level});
  std::vector<EdgeByKey> edges;
  for (const auto& [t, h] : edge_set) edges.push_back({t, h});
  return LayeredGraph::from_parts(std::move(vertices), edges);
}

LayeredGraph build_complete(const std::vector<int>& m, const BuildOptions& options) {
  if (m.empty()) throw Error("complete graph needs at least one level size");
  for (int x : m) {
    if (x < 1) throw Error("complete graph level sizes must be >= 1");
  }
  if (m.back() != 1) throw Error("complete graph needs a single level-0 vertex (last entry 1)");
  std::size_t total = 0;
  for (int x : m) total += static_cast<std::size_t>(x);
  check_cap(total, options, "complete graph");

  const int top = static_cast<int>(m.size()) - 1;
  auto key = [](int level, int index) { return "c" + std::to_string(level) + "." + std::to_string(index); };
  std::vector<Vertex> vertices;
  std::vector<EdgeByKey> edges;
  for (int pos = 0; pos <= top; ++pos) {
    const int level = top - pos;
    for (int i = 0; i < m[pos]; ++i) {
      vertices.push_back({key(level, i), level});
      if (level > 0) {
        for (int j = 0; j < m[pos + 1]; ++j) edges.push_back({key(level, i), key(level - 1, j)});
      }
    }
  }
  return LayeredGraph::from_parts(std::move(vertices), edges);
}

std::string partition_key(const std::vector<int>& parts) {
  std::string key = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) key += (i ? "," : "") + std::to_string(parts[i]);
  return key + ")";
}

void partitions_of(int total, int max_part, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(total, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_of(total - part, part, prefix, out);
    prefix.pop_back();
  }
}

LayeredGraph build_young(int max_rank, const BuildOptions& options) {
  if (max_rank < 1) throw Error("young graph needs max-rank >= 1");
  std::vector<std::vector<int>> parts;
  for (int size = 0; size <= max_rank; ++size) {
    std::vector<int> prefix;
    partitions_of(size, size, prefix, parts);
    check_cap(parts.size(), options, "young(" + std::to_string(max_rank) + ")");
  }
  std::vector<Vertex> vertices;
  std::vector<EdgeByKey> edges;
  for (const auto& lambda : parts) {
    int size = 0;
    for (int x : lambda) size += x;
    const std::string key = partition_key(lambda);
    vertices.push_back({key, size});
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      // Removing a box from row i keeps a partition iff the next row is shorter.
      if (i + 1 < lambda.size() && lambda[i + 1] == lambda[i]) continue;
      std::vector<int> mu = lambda;
      if (--mu[i] == 0) mu.pop_back();
      edges.push_back({key, partition_key(mu)});
    }
  }
  return LayeredGraph::from_parts(std::move(vertices), edges);
}

}  // namespace

LayeredGraph build_graph(const GraphSpec& spec, const BuildOptions& options) {
  switch (spec.family) {
    case GraphSpec::Family::boolean:
      return build_boolean(spec.n, options);
    case GraphSpec::Family::subspace:
      return build_subspace(spec.n, spec.q, options);
    case GraphSpec::Family::complete:
      return build_complete(spec.levels, options);
    case GraphSpec::Family::young:
      return build_young(spec.max_rank, options);
    case GraphSpec::Family::file: {
      LayeredGraph g = read_graph_file(spec.path);
      check_cap(g.vertex_count(), options, "graph file " + spec.path);
      auto report = validate(g);
      if (!report.ok) {
        std::string msg = "invalid layered graph in " + spec.path + ":";
        for (const auto& f : report.failures) msg += "\n  " + f;
        throw Error(msg);
      }
      return g;
    }
  }
  throw Error("unknown graph family");
}

}  // namespace gralg

#include "gralg/sufficiency.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

#include "gralg/error.hpp"

namespace gralg {

namespace {

class ClosureBuilder {
 public:
  ClosureBuilder(const LayeredGraph& graph, bool trace)
      : graph_(graph), trace_(trace), by_tail_(graph.vertex_count()), by_head_(graph.vertex_count()) {}

  void add(EdgeIndex e) {
    if (!result_.closure.insert(e).second) return;
    by_tail_[graph_.edge(e).tail].push_back(e);
    by_head_[graph_.edge(e).head].push_back(e);
    queue_.push_back(e);
  }

  ClosureTrace run(const EdgeSet& s) {
    for (EdgeIndex e : s) {
      if (e >= graph_.edge_count()) throw Error("edge index out of range");
      add(e);
    }
    while (!queue_.empty()) {
      const EdgeIndex e = queue_.front();
      queue_.pop_front();
      const Edge& edge = graph_.edge(e);
      // Copies: the lists grow while rules fire.
      const auto siblings = by_tail_[edge.tail];
      for (EdgeIndex other : siblings) {
        if (other != e) apply_d(e, other);
      }
      const auto cousins = by_head_[edge.head];
      for (EdgeIndex other : cousins) {
        if (other != e) apply_u(e, other);
      }
    }
    return std::move(result_);
  }

 private:
  void apply_d(EdgeIndex e1, EdgeIndex e2) {
    const VertexIndex a = graph_.edge(e1).head;
    const VertexIndex b = graph_.edge(e2).head;
    for (VertexIndex x : graph_.down(a)) {
      const auto f2 = graph_.find_edge(b, x);
      if (!f2) continue;
      record(DuRule::d, {e1, e2}, {*graph_.find_edge(a, x), *f2});
    }
  }

  void apply_u(EdgeIndex f1, EdgeIndex f2) {
    const VertexIndex a = graph_.edge(f1).tail;
    const VertexIndex b = graph_.edge(f2).tail;
    for (VertexIndex v : graph_.up(a)) {
      const auto e2 = graph_.find_edge(v, b);
      if (!e2) continue;
      record(DuRule::u, {f1, f2}, {*graph_.find_edge(v, a), *e2});
    }
  }

  void record(DuRule rule, std::pair<EdgeIndex, EdgeIndex> from, std::pair<EdgeIndex, EdgeIndex> to) {
    std::vector<EdgeIndex> added;
    for (EdgeIndex e : {to.first, to.second}) {
      if (!result_.closure.count(e)) {
        add(e);
        added.push_back(e);
      }
    }
    if (trace_ && !added.empty()) result_.steps.push_back({rule, from, to, std::move(added)});
  }

  const LayeredGraph& graph_;
  bool trace_;
  ClosureTrace result_;
  std::vector<std::vector<EdgeIndex>> by_tail_;
  std::vector<std::vector<EdgeIndex>> by_head_;
  std::deque<EdgeIndex> queue_;
};

std::vector<int> boolean_elements(std::string_view key) {
  if (key.size() < 2 || key.front() != '{' || key.back() != '}') throw Error("not a boolean vertex key: " + std::string(key));
  const std::string_view inner = key.substr(1, key.size() - 2);
  std::vector<int> out;
  if (inner.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= inner.size()) {
      const std::size_t end = std::min(inner.find(',', start), inner.size());
      out.push_back(std::stoi(std::string(inner.substr(start, end - start))));
      start = end + 1;
    }
  } else {
    for (char c : inner) out.push_back(c - '0');
  }
  return out;
}

}  // namespace

EdgeSet du_closure(const LayeredGraph& graph, const EdgeSet& s) {
  return ClosureBuilder(graph, false).run(s).closure;
}

ClosureTrace du_closure_traced(const LayeredGraph& graph, const EdgeSet& s) {
  return ClosureBuilder(graph, true).run(s);
}

std::optional<Path> is_sufficient(const LayeredGraph& graph, const EdgeSet& s) {
  const EdgeSet closure = du_closure(graph, s);
  std::vector<std::vector<EdgeIndex>> out(graph.vertex_count());
  for (EdgeIndex e : closure) out[graph.edge(e).tail].push_back(e);
  for (VertexIndex source : graph.sources()) {
    std::vector<std::optional<EdgeIndex>> via(graph.vertex_count());
    std::vector<bool> seen(graph.vertex_count(), false);
    std::deque<VertexIndex> queue{source};
    seen[source] = true;
    while (!queue.empty()) {
      const VertexIndex v = queue.front();
      queue.pop_front();
      if (graph.out_edges(v).empty()) {
        if (v == source) break;  // isolated vertex: not a path
        Path path;
        for (VertexIndex w = v; via[w]; w = graph.edge(*via[w]).tail) path.push_back(*via[w]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      for (EdgeIndex e : out[v]) {
        const VertexIndex w = graph.edge(e).head;
        if (seen[w]) continue;
        seen[w] = true;
        via[w] = e;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

AmpleResult is_ample(const LayeredGraph& graph, const EdgeSet& s) {
  std::set<VertexIndex> w;
  for (EdgeIndex e : s) {
    w.insert(graph.edge(e).tail);
    w.insert(graph.edge(e).head);
  }
  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
    if (graph.out_edges(v).empty()) continue;  // minimal
    const bool ok = std::any_of(w.begin(), w.end(), [&](VertexIndex u) { return !has_directed_path(graph, u, v); });
    if (!ok) return {false, 1, v};
  }
  for (VertexIndex v = 0; v < graph.vertex_count(); ++v) {
    if (graph.in_edges(v).empty()) continue;  // maximal
    const bool ok = std::any_of(w.begin(), w.end(), [&](VertexIndex x) { return !has_directed_path(graph, v, x); });
    if (!ok) return {false, 2, v};
  }
  return {true, 0, std::nullopt};
}

bool is_connected_edgeset(const LayeredGraph& graph, const EdgeSet& s) {
  if (s.size() <= 1) return true;
  std::map<VertexIndex, std::vector<VertexIndex>> adj;
  for (EdgeIndex e : s) {
    const Edge& edge = graph.edge(e);
    adj[edge.tail].push_back(edge.head);
    adj[edge.head].push_back(edge.tail);
  }
  std::set<VertexIndex> seen{adj.begin()->first};
  std::vector<VertexIndex> stack{adj.begin()->first};
  while (!stack.empty()) {
    const VertexIndex v = stack.back();
    stack.pop_back();
    for (VertexIndex w : adj[v]) {
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen.size() == adj.size();
}

PseudoRootLabel parse_pseudoroot_label(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("pseudo-root label needs A:i, got " + std::string(text));
  PseudoRootLabel label;
  try {
    const std::string a(text.substr(0, colon));
    const std::string i(text.substr(colon + 1));
    if (i.empty() || i.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument("index");
    label.i = std::stoi(i);
    if (a.find(',') != std::string::npos) {
      std::size_t start = 0;
      while (start <= a.size()) {
        const std::size_t end = std::min(a.find(',', start), a.size());
        const std::string part = a.substr(start, end - start);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument("set");
        label.a.push_back(std::stoi(part));
        start = end + 1;
      }
    } else {
      for (char c : a) {
        if (c < '1' || c > '9') throw std::invalid_argument("set");
        label.a.push_back(c - '0');
      }
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed pseudo-root label: " + std::string(text));
  }
  std::sort(label.a.begin(), label.a.end());
  return label;
}

std::string to_string(const PseudoRootLabel& label) {
  const bool wide = !label.a.empty() && label.a.back() >= 10;
  std::string out;
  for (std::size_t k = 0; k < label.a.size(); ++k) {
    if (wide && k > 0) out += ",";
    out += std::to_string(label.a[k]);
  }
  return out + ":" + std::to_string(label.i);
}

EdgeIndex edge_for_pseudoroot(const LayeredGraph& boolean_graph, int n, const PseudoRootLabel& label) {
  std::vector<int> a = label.a;
  std::sort(a.begin(), a.end());
  const bool valid_i = label.i >= 1 && label.i <= n;
  const bool valid_a = std::adjacent_find(a.begin(), a.end()) == a.end() &&
                       std::all_of(a.begin(), a.end(), [n](int x) { return x >= 1 && x <= n; });
  if (!valid_i || !valid_a || std::binary_search(a.begin(), a.end(), label.i)) {
    throw Error("invalid pseudo-root label " + to_string(label) + " for n = " + std::to_string(n));
  }
  std::vector<int> top = a;
  top.insert(std::upper_bound(top.begin(), top.end(), label.i), label.i);
  const auto tail = boolean_graph.find(boolean_key(top));
  const auto head = boolean_graph.find(boolean_key(a));
  if (!tail || !head) throw Error("graph has no vertex for label " + to_string(label));
  const auto e = boolean_graph.find_edge(*tail, *head);
  if (!e) throw Error("graph has no edge for label " + to_string(label));
  return *e;
}

PseudoRootLabel label_for_edge(const LayeredGraph& boolean_graph, EdgeIndex e) {
  const Edge& edge = boolean_graph.edge(e);
  const auto top = boolean_elements(boolean_graph.key(edge.tail));
  auto a = boolean_elements(boolean_graph.key(edge.head));
  std::sort(a.begin(), a.end());
  std::vector<int> extra;
  for (int x : top) {
    if (!std::binary_search(a.begin(), a.end(), x)) extra.push_back(x);
  }
  if (extra.size() != 1 || top.size() != a.size() + 1) throw Error("edge is not a boolean cover");
  return {a, extra.front()};
}

bool check_necessary_condition(int n, const std::vector<PseudoRootLabel>& labels) {
  if (labels.size() != static_cast<std::size_t>(n)) {
    throw Error("necessary condition needs exactly " + std::to_string(n) + " labels");
  }
  std::set<int> is;
  for (const auto& l : labels) is.insert(l.i);
  return is.size() == labels.size();
}

EdgeSet parse_edge_list(const LayeredGraph& graph, std::string_view text, int boolean_n) {
  EdgeSet out;
  if (text.empty()) return out;
  std::vector<std::string> items;
  // Commas also occur inside vertex keys ("(2,1)", "{1,10}") and wide labels
  // ("1,10:3"), so split only at bracket depth 0 once an item is complete.
  std::string current;
  int depth = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    const char c = k < text.size() ? text[k] : ',';
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') --depth;
    if (c != ',' || depth > 0) {
      current += c;
      continue;
    }
    const bool unfinished_label = boolean_n > 0 && k < text.size() && !current.empty() &&
                                  current.find('>') == std::string::npos && current.find(':') == std::string::npos;
    if (unfinished_label) {
      current += c;
      continue;
    }
    if (current.empty()) throw std::invalid_argument("empty item in edge list");
    items.push_back(current);
    current.clear();
  }
  for (const auto& item : items) {
    const auto arrow = item.find('>');
    if (arrow != std::string::npos) {
      const auto tail = graph.find(item.substr(0, arrow));
      const auto head = graph.find(item.substr(arrow + 1));
      if (!tail || !head) throw std::invalid_argument("unknown vertex in edge " + item);
      const auto e = graph.find_edge(*tail, *head);
      if (!e) throw std::invalid_argument("no edge " + item);
      out.insert(*e);
    } else {
      if (boolean_n <= 0) throw std::invalid_argument("pseudo-root labels need a boolean graph: " + item);
      const auto label = parse_pseudoroot_label(item);
      try {
        out.insert(edge_for_pseudoroot(graph, boolean_n, label));
      } catch (const Error& e) {
        throw std::invalid_argument(e.what());
      }
    }
  }
  return out;
}

EdgeSet random_ample_connected(const LayeredGraph& graph, std::size_t size, std::uint64_t seed,
                               const std::function<bool(const EdgeSet&)>& filter, const SamplingBudget& budget) {
  if (size == 0) throw Error("an empty edge set is never ample");
  if (size > graph.edge_count()) throw Error("sample size exceeds the edge count");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < budget.attempts; ++attempt) {
    EdgeSet s{static_cast<EdgeIndex>(rng() % graph.edge_count())};
    while (s.size() < size) {
      // Edges touching the current set but not yet in it, in canonical order.
      std::set<EdgeIndex> frontier;
      for (EdgeIndex e : s) {
        for (VertexIndex v : {graph.edge(e).tail, graph.edge(e).head}) {
          for (EdgeIndex f : graph.out_edges(v)) frontier.insert(f);
          for (EdgeIndex f : graph.in_edges(v)) frontier.insert(f);
        }
      }
      for (EdgeIndex e : s) frontier.erase(e);
      if (frontier.empty()) break;
      auto it = frontier.begin();
      std::advance(it, static_cast<long>(rng() % frontier.size()));
      s.insert(*it);
    }
    if (s.size() != size || !is_ample(graph, s).ample) continue;
    if (filter && !filter(s)) continue;
    return s;
  }
  throw BudgetExceeded("no ample connected edge set of size " + std::to_string(size) + " found in " +
                       std::to_string(budget.attempts) + " attempts");
}

std::vector<SufficiencyTableRow> exhaustive_table(const LayeredGraph& boolean_graph, int n) {
  const std::size_t m = boolean_graph.edge_count();
  const auto size = static_cast<std::size_t>(n);
  if (n < 1 || size > m) throw Error("edge-set size out of range");
  std::map<std::tuple<bool, bool, bool>, SufficiencyTableRow> rows;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(size), true);
  do {
    EdgeSet s;
    std::vector<PseudoRootLabel> labels;
    for (std::size_t e = 0; e < m; ++e) {
      if (!pick[e]) continue;
      s.insert(e);
      labels.push_back(label_for_edge(boolean_graph, e));
    }
    const bool distinct = check_necessary_condition(n, labels);
    const bool connected = is_connected_edgeset(boolean_graph, s);
    const bool ample = is_ample(boolean_graph, s).ample;
    auto& row = rows[{distinct, connected, ample}];
    row.distinct_i = distinct;
    row.connected = connected;
    row.ample = ample;
    ++row.total;
    if (is_sufficient(boolean_graph, s)) ++row.sufficient;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::vector<SufficiencyTableRow> out;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) out.push_back(it->second);
  return out;
}

}  // namespace gralg

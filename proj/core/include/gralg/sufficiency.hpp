#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gralg/graph.hpp"

namespace gralg {

using EdgeSet = std::set<EdgeIndex>;

enum class DuRule { d, u };

/// One productive rule application: the source pair and the edges it added.
struct ClosureStep {
  DuRule rule = DuRule::d;
  std::pair<EdgeIndex, EdgeIndex> from;
  std::pair<EdgeIndex, EdgeIndex> to;
  std::vector<EdgeIndex> added;
};

struct ClosureTrace {
  EdgeSet closure;
  std::vector<ClosureStep> steps;
};

/// Least superset closed under the D rule (common-tail pair -> common-head pair
/// below it) and the U rule (common-head pair -> common-tail pair above it).
EdgeSet du_closure(const LayeredGraph& graph, const EdgeSet& s);
ClosureTrace du_closure_traced(const LayeredGraph& graph, const EdgeSet& s);

/// A source-to-sink path inside the closure of s, if any; sources are tried in
/// canonical order with breadth-first search.
std::optional<Path> is_sufficient(const LayeredGraph& graph, const EdgeSet& s);

struct AmpleResult {
  bool ample = false;
  /// 1: a non-minimal vertex reachable from every endpoint; 2: a non-maximal
  /// vertex reaching every endpoint.
  int failed_clause = 0;
  std::optional<VertexIndex> witness;
};
AmpleResult is_ample(const LayeredGraph& graph, const EdgeSet& s);

bool is_connected_edgeset(const LayeredGraph& graph, const EdgeSet& s);

/// x_{A,i} in Q_n, with A sorted and 1-based.
struct PseudoRootLabel {
  std::vector<int> a;
  int i = 0;

  friend bool operator==(const PseudoRootLabel&, const PseudoRootLabel&) = default;
  friend auto operator<=>(const PseudoRootLabel&, const PseudoRootLabel&) = default;
};

/// "12:3" or ":1"; comma-separated elements ("1,10:3") are also accepted.
PseudoRootLabel parse_pseudoroot_label(std::string_view text);
std::string to_string(const PseudoRootLabel& label);

/// The edge A+{i} -> A of boolean(n).
EdgeIndex edge_for_pseudoroot(const LayeredGraph& boolean_graph, int n, const PseudoRootLabel& label);
PseudoRootLabel label_for_edge(const LayeredGraph& boolean_graph, EdgeIndex e);

/// Pairwise distinct i-components; throws unless exactly n labels are given.
bool check_necessary_condition(int n, const std::vector<PseudoRootLabel>& labels);

/// Parses a comma-separated list of "tail>head" edges or "A:i" labels (boolean graphs).
EdgeSet parse_edge_list(const LayeredGraph& graph, std::string_view text, int boolean_n = 0);

struct SamplingBudget {
  int attempts = 10000;
};

/// Seeded rejection sampling of connected, ample edge sets of the given size
/// that also satisfy the optional filter. Throws BudgetExceeded when none is found.
EdgeSet random_ample_connected(const LayeredGraph& graph, std::size_t size, std::uint64_t seed,
                               const std::function<bool(const EdgeSet&)>& filter = {},
                               const SamplingBudget& budget = {});

struct SufficiencyTableRow {
  bool distinct_i = false;
  bool connected = false;
  bool ample = false;
  std::size_t total = 0;
  std::size_t sufficient = 0;
};

/// Every size-n edge set of boolean(n), grouped by (distinct i, connected, ample).
std::vector<SufficiencyTableRow> exhaustive_table(const LayeredGraph& boolean_graph, int n);

}  // namespace gralg

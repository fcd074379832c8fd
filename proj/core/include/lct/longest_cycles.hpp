#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "lct/cycles.hpp"
#include "lct/decomposition.hpp"
#include "lct/graph.hpp"

namespace lct {

inline constexpr int kDefaultEnumerationCap = 18;

struct EnumerationOptions {
  int max_order = kDefaultEnumerationCap;
  /// Wall-clock budget; exceeding it throws CapExceeded (no partial result).
  std::optional<std::chrono::milliseconds> time_budget;
};

/// Every longest cycle of a graph, canonical and sorted.
struct LongestCycleSet {
  /// Length of a longest cycle; 0 iff the graph is acyclic.
  int length = 0;
  std::vector<Cycle> cycles;
  /// Backtracking nodes visited, for reporting.
  std::uint64_t search_nodes = 0;

  /// Distinct vertex sets of the cycles, sorted ascending by mask.
  std::vector<VertexSet> vertex_sets() const;
};

/// Backtracking from the smallest vertex of each cycle over larger vertices.
/// A branch is cut when the vertices still reachable from its end cannot
/// complete a cycle at least as long as the best found so far, so every
/// longest cycle is kept. Throws CapExceeded past `max_order` or the budget.
LongestCycleSet enumerate_longest_cycles(const Graph& g, const EnumerationOptions& opts = {});

/// Length of a longest cycle by dynamic programming over `td` (introduce,
/// forget and join steps with path-endpoint matchings per bag). Independent
/// of enumerate_longest_cycles. Throws PreconditionError if td is invalid for g.
int longest_cycle_length_td(const Graph& g, const TreeDecomposition& td);

}  // namespace lct

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "lct/graph.hpp"
#include "lct/longest_cycles.hpp"

namespace lct {

/// Minimum number of vertices meeting every longest cycle, with the
/// lexicographically least minimum set and the family it was computed against.
struct TransversalResult {
  int lct = 0;
  VertexSet witness;
  LongestCycleSet family;
};

bool hits_all(VertexSet x, std::span<const VertexSet> sets);

/// Exact minimum hitting set of `sets` over vertices 0..n-1. Sizes 1, 2 and 3
/// are tried exhaustively in lexicographic order; larger answers come from a
/// branch-and-bound cover search, then the lexicographically least set of that
/// size is selected. `sets` must be non-empty and contain no empty set.
VertexSet min_hitting_set(std::span<const VertexSet> sets, int n);

/// lct of an already enumerated family. Throws PreconditionError for an empty family.
TransversalResult transversal_of(LongestCycleSet family, int n);

/// Enumerates the longest cycles and computes lct. Throws PreconditionError for
/// an acyclic graph and CapExceeded past the enumeration cap.
TransversalResult compute_lct(const Graph& g, const EnumerationOptions& opts = {});

/// Outcome of a checked statement on one instance.
enum class Outcome { Pass, Fail, PremiseNotMet, VacuousPass };
std::string_view to_string(Outcome o);

}  // namespace lct

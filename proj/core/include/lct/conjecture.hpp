#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lct/graph.hpp"
#include "lct/longest_cycles.hpp"
#include "lct/transversal.hpp"

namespace lct {

struct Finding {
  enum class Kind { Consistent, Counterexample };
  Kind kind = Kind::Consistent;
  TransversalResult transversal;
  /// Standalone evidence, filled for counterexamples only.
  std::string bundle;
};

std::string_view to_string(Finding::Kind k);

/// Computes lct of a 2-connected graph of treewidth at most 4. lct >= 3 is a
/// counterexample to the two-vertex transversal statement and carries a bundle.
/// Throws PreconditionError outside that class and CapExceeded past the caps.
Finding conjecture_scan(const Graph& g, const EnumerationOptions& opts = {});

/// Plain-text evidence that no `refute_size` vertices meet all longest cycles:
///   graph6 <string>
///   n <n>
///   edges <u>-<v> ...
///   longest_cycle_length <L>
///   longest_cycle_count <N>
///   cycle <i> <v0> <v1> ...        (one line per longest cycle)
///   lct <value>
///   refute_size <r>
///   refute <v1> ... <vr> <i>        (cycle i avoids v1..vr; one line per r-subset)
/// Lines `extra` are appended verbatim. Requires tr.lct > refute_size.
std::string write_bundle(const Graph& g, const TransversalResult& tr, int refute_size = 2,
                         const std::vector<std::string>& extra = {});

struct BundleCheck {
  bool ok = false;
  std::string message;
};

/// Re-checks a bundle from its text alone: the listed cycles are distinct
/// cycles of the graph of the stated length, enumeration finds the same length
/// and count, and every r-subset of vertices is refuted by a listed cycle.
BundleCheck reverify_bundle(std::string_view text, const EnumerationOptions& opts = {});

}  // namespace lct

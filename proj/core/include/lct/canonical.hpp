#pragma once

#include <string>
#include <vector>

#include "lct/graph.hpp"

namespace lct {

inline constexpr int kCanonicalMaxOrder = 12;

/// Canonical relabeling: perm[v] is the new id of v. Isomorphic graphs map to
/// the same relabeled graph. Colour refinement fixes the cell order, then the
/// labelings inside cells are searched for the largest adjacency code.
/// Throws CapExceeded above kCanonicalMaxOrder vertices.
std::vector<int> canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);

/// graph6 string of the canonical form.
std::string canonical_key(const Graph& g);

}  // namespace lct

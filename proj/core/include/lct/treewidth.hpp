#pragma once

#include <span>
#include <vector>

#include "lct/decomposition.hpp"
#include "lct/graph.hpp"

namespace lct {

inline constexpr int kDefaultTreewidthCap = 24;

struct TreewidthResult {
  int width = -1;
  std::vector<Vertex> elimination_order;
  TreeDecomposition decomposition;
};

/// Exact treewidth by dynamic programming over vertex subsets: the best width
/// of a set S eliminated first is min over its last vertex v of
/// max(best(S - v), |Q(S - v, v)|), where Q(S, v) is the set of vertices
/// outside S + v reachable from v through S. Throws CapExceeded above `cap`.
TreewidthResult exact_treewidth(const Graph& g, int cap = kDefaultTreewidthCap);

/// Width induced by eliminating vertices in `order` (max higher degree in the fill graph).
int elimination_width(const Graph& g, std::span<const Vertex> order);

/// Decomposition with one bag {v} + later fill-neighbours of v per vertex.
TreeDecomposition decomposition_from_order(const Graph& g, std::span<const Vertex> order);

}  // namespace lct

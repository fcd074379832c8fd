#pragma once

#include <vector>

#include "lct/graph.hpp"

namespace lct {

bool is_connected(const Graph& g);

/// Connected, at least 3 vertices and no articulation vertex.
/// Single DFS with low-link values.
bool is_biconnected(const Graph& g);

/// Articulation vertices of g, ascending.
VertexSet articulation_points(const Graph& g);

/// Components of G - s, each as a vertex set, ordered by smallest member.
std::vector<VertexSet> components_after_removal(const Graph& g, VertexSet s);

/// True iff two vertices of x \ s lie in different components of G - s.
bool separates(const Graph& g, VertexSet s, VertexSet x);

/// Vertices reachable from `from` inside the vertex set `within` (from must be in within).
VertexSet reach_within(const Graph& g, Vertex from, VertexSet within);

}  // namespace lct

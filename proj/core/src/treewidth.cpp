#include "lct/treewidth.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "lct/connectivity.hpp"
#include "lct/errors.hpp"

namespace lct {

namespace {

// Vertices outside `before` + v reachable from v through `before`.
std::uint64_t q_set(const Graph& g, std::uint64_t before, Vertex v) {
  const std::uint64_t vbit = std::uint64_t{1} << v;
  VertexSet r = reach_within(g, v, VertexSet(before | vbit));
  std::uint64_t nb = 0;
  for (Vertex x : r) nb |= g.neighbor_mask(x);
  return nb & ~(before | vbit);
}

}  // namespace

int elimination_width(const Graph& g, std::span<const Vertex> order) {
  std::vector<std::uint64_t> adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbor_mask(v);
  std::uint64_t remaining = g.vertices().mask();
  int width = -1;
  for (Vertex v : order) {
    remaining &= ~(std::uint64_t{1} << v);
    const std::uint64_t higher = adj[v] & remaining;
    width = std::max(width, std::popcount(higher));
    for (Vertex u : VertexSet(higher)) adj[u] |= higher & ~(std::uint64_t{1} << u);
  }
  return width;
}

TreeDecomposition decomposition_from_order(const Graph& g, std::span<const Vertex> order) {
  const int n = g.order();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  std::vector<VertexSet> bags(n);
  std::vector<TreeEdge> edges;
  std::uint64_t before = 0;
  Node last_root = -1;
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[i];
    const std::uint64_t higher = q_set(g, before, v);
    bags[i] = VertexSet(higher | (std::uint64_t{1} << v));
    before |= std::uint64_t{1} << v;
    if (higher == 0) {
      if (last_root >= 0) edges.emplace_back(last_root, i);
      last_root = i;
      continue;
    }
    int parent = n;
    for (Vertex u : VertexSet(higher)) parent = std::min(parent, pos[u]);
    edges.emplace_back(i, parent);
  }
  return TreeDecomposition(std::move(bags), std::move(edges));
}

TreewidthResult exact_treewidth(const Graph& g, int cap) {
  const int n = g.order();
  if (n > cap) throw CapExceeded("exact treewidth cap is " + std::to_string(cap) + " vertices, graph has " + std::to_string(n));
  if (n == 0) return {-1, {}, TreeDecomposition()};

  const std::uint64_t full = g.vertices().mask();
  // best[S] holds width + 1 so that the empty set (width -1) fits in a byte.
  std::vector<std::uint8_t> best(std::size_t{1} << n, 0);
  for (std::uint64_t s = 1; s <= full; ++s) {
    int b = 255;
    for (Vertex v : VertexSet(s)) {
      const std::uint64_t rest = s & ~(std::uint64_t{1} << v);
      const int w = std::max<int>(best[rest], std::popcount(q_set(g, rest, v)) + 1);
      b = std::min(b, w);
    }
    best[s] = static_cast<std::uint8_t>(b);
  }

  TreewidthResult out;
  out.width = best[full] - 1;
  std::vector<Vertex> reversed;
  std::uint64_t s = full;
  while (s) {
    for (Vertex v : VertexSet(s)) {
      const std::uint64_t rest = s & ~(std::uint64_t{1} << v);
      const int w = std::max<int>(best[rest], std::popcount(q_set(g, rest, v)) + 1);
      if (w == best[s]) {
        reversed.push_back(v);
        s = rest;
        break;
      }
    }
  }
  out.elimination_order.assign(reversed.rbegin(), reversed.rend());
  out.decomposition = decomposition_from_order(g, out.elimination_order);
  return out;
}

}  // namespace lct

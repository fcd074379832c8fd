#include "lct/connectivity.hpp"

#include <algorithm>

namespace lct {

VertexSet reach_within(const Graph& g, Vertex from, VertexSet within) {
  std::uint64_t seen = std::uint64_t{1} << from;
  std::uint64_t frontier = seen;
  const std::uint64_t allowed = within.mask();
  while (frontier) {
    std::uint64_t next = 0;
    for (Vertex v : VertexSet(frontier)) next |= g.neighbor_mask(v);
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return VertexSet(seen);
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return reach_within(g, 0, g.vertices()) == g.vertices();
}

namespace {

struct LowLink {
  const Graph& g;
  std::vector<int> disc, low;
  VertexSet cut;
  int timer = 0;

  explicit LowLink(const Graph& graph) : g(graph), disc(graph.order(), -1), low(graph.order(), 0) {}

  void dfs(Vertex u, Vertex parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(u)) {
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[u] = std::min(low[u], disc[w]);
        continue;
      }
      ++children;
      dfs(w, u);
      low[u] = std::min(low[u], low[w]);
      if (parent >= 0 && low[w] >= disc[u]) cut.insert(u);
    }
    if (parent < 0 && children > 1) cut.insert(u);
  }
};

}  // namespace

VertexSet articulation_points(const Graph& g) {
  LowLink ll(g);
  for (Vertex v = 0; v < g.order(); ++v)
    if (ll.disc[v] < 0) ll.dfs(v, -1);
  return ll.cut;
}

bool is_biconnected(const Graph& g) {
  if (g.order() < 3) return false;
  LowLink ll(g);
  ll.dfs(0, -1);
  if (ll.timer != g.order()) return false;
  return ll.cut.empty();
}

std::vector<VertexSet> components_after_removal(const Graph& g, VertexSet s) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices() - s;
  while (!rest.empty()) {
    VertexSet comp = reach_within(g, rest.front(), rest);
    out.push_back(comp);
    rest = rest - comp;
  }
  return out;
}

bool separates(const Graph& g, VertexSet s, VertexSet x) {
  VertexSet outside = x - s;
  if (outside.size() < 2) return false;
  VertexSet comp = reach_within(g, outside.front(), g.vertices() - s);
  return !outside.subset_of(comp);
}

}  // namespace lct

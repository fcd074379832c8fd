#include "lct/graph.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "lct/errors.hpp"

namespace lct {

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::span<const Vertex>(vs.begin(), vs.size())) {}

VertexSet::VertexSet(std::span<const Vertex> vs) {
  for (Vertex v : vs) {
    if (v < 0 || v >= kMaxVertices) throw PreconditionError("vertex id out of range: " + std::to_string(v));
    insert(v);
  }
}

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

Graph::Graph(int n, std::span<const Edge> edges) : n_(n), adj_(n), adj_mask_(n, 0) {
  if (n < 0 || n > kMaxVertices) throw PreconditionError("vertex count out of range: " + std::to_string(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    adj_mask_[u] |= std::uint64_t{1} << v;
    adj_mask_[v] |= std::uint64_t{1} << u;
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

Graph Graph::induced(VertexSet keep) const {
  std::vector<int> index(n_, -1);
  int next = 0;
  for (Vertex v : keep) index[v] = next++;
  std::vector<Edge> es;
  for (auto [u, v] : edges_)
    if (index[u] >= 0 && index[v] >= 0) es.emplace_back(index[u], index[v]);
  return Graph(next, es);
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (const auto& e : edges_)
    if (e != Edge{u, v}) es.push_back(e);
  return Graph(n_, es);
}

Graph Graph::relabeled(std::span<const int> perm) const {
  std::vector<Edge> es;
  es.reserve(edges_.size());
  for (auto [u, v] : edges_) es.emplace_back(perm[u], perm[v]);
  return Graph(n_, es);
}

namespace named {

Graph complete(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, es);
}

Graph cycle(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, es);
}

Graph path(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

Graph petersen() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph(10, es);
}

Graph separation_example() {
  using I = SeparationExampleIds;
  return Graph(9, {{I::a, I::b},   {I::b, I::c},   {I::a, I::c},   {I::a, I::d},   {I::b, I::d},
                   {I::c, I::d},   {I::b, I::v1},  {I::d, I::v1},  {I::b, I::v2},  {I::d, I::v2},
                   {I::b, I::v3},  {I::c, I::v4},  {I::v3, I::v4}, {I::v3, I::c},  {I::v4, I::b},
                   {I::a, I::v1},  {I::a, I::v2},  {I::a, I::v5},  {I::v5, I::c}});
}

std::span<const char* const> fixture_names() {
  static constexpr std::array<const char*, 9> names{"a", "b", "c", "d", "v1", "v2", "v3", "v4", "v5"};
  return names;
}

}  // namespace named
}  // namespace lct

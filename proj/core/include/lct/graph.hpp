#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace lct {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Hard upper bound on vertex count; every vertex set fits in one machine word.
inline constexpr int kMaxVertices = 64;

/// Sorted, duplicate-free set of vertex ids backed by a 64-bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t mask) : mask_(mask) {}
  VertexSet(std::initializer_list<Vertex> vs);
  explicit VertexSet(std::span<const Vertex> vs);

  static constexpr VertexSet all(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(Vertex v) const { return (mask_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet o) const { return (mask_ & ~o.mask_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (mask_ & o.mask_) != 0; }
  /// Smallest element; undefined on the empty set.
  constexpr Vertex front() const { return std::countr_zero(mask_); }

  void insert(Vertex v) { mask_ |= std::uint64_t{1} << v; }
  void erase(Vertex v) { mask_ &= ~(std::uint64_t{1} << v); }

  std::vector<Vertex> to_vector() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask_ | b.mask_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & b.mask_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.mask_ <=> b.mask_; }

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t m) : m_(m) {}
    constexpr Vertex operator*() const { return std::countr_zero(m_); }
    constexpr iterator& operator++() {
      m_ &= m_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t m_ = 0;
  };
  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t mask_ = 0;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Throws PreconditionError on self-loops, out-of-range ids or n > kMaxVertices.
  /// Parallel edges given twice are merged.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  VertexSet vertices() const { return VertexSet::all(n_); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  VertexSet neighbor_set(Vertex v) const { return VertexSet(adj_mask_[v]); }
  std::uint64_t neighbor_mask(Vertex v) const { return adj_mask_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const { return (adj_mask_[u] >> v) & 1U; }

  /// Subgraph induced on `keep`, vertices renumbered in ascending order.
  Graph induced(VertexSet keep) const;
  /// Same vertex set, one edge fewer.
  Graph without_edge(Vertex u, Vertex v) const;
  /// Relabel: vertex v becomes perm[v].
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> adj_mask_;
};

/// Common small graphs used by tests, benchmarks and the CLI.
namespace named {
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph petersen();

/// The 9-vertex example graph with S = {a,b,c,d}; see fixture_names().
Graph separation_example();
/// Vertex ids of separation_example(): a b c d v1 v2 v3 v4 v5.
struct SeparationExampleIds {
  static constexpr Vertex a = 0, b = 1, c = 2, d = 3;
  static constexpr Vertex v1 = 4, v2 = 5, v3 = 6, v4 = 7, v5 = 8;
};
/// Name of each vertex of separation_example(), indexed by id.
std::span<const char* const> fixture_names();
}  // namespace named

}  // namespace lct

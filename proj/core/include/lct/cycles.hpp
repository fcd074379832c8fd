#pragma once

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "lct/graph.hpp"

namespace lct {

/// Vertex sequence in traversal order with consecutive vertices adjacent.
/// A single vertex is a path of length 0.
class PathSegment {
 public:
  PathSegment() = default;
  /// Throws PreconditionError if the sequence is empty or repeats a vertex.
  explicit PathSegment(std::vector<Vertex> seq);

  const std::vector<Vertex>& sequence() const { return seq_; }
  Vertex front() const { return seq_.front(); }
  Vertex back() const { return seq_.back(); }
  /// Number of edges.
  int length() const { return static_cast<int>(seq_.size()) - 1; }
  VertexSet vertices() const { return set_; }
  bool lies_in(const Graph& g) const;

  friend bool operator==(const PathSegment& a, const PathSegment& b) { return a.seq_ == b.seq_; }

 private:
  std::vector<Vertex> seq_;
  VertexSet set_;
};

/// A cycle stored in canonical form: rotated to start at its smallest vertex,
/// oriented so the second vertex is the smaller neighbour of the first.
class Cycle {
 public:
  Cycle() = default;
  /// Throws PreconditionError on fewer than 3 vertices or a repeated vertex.
  explicit Cycle(std::vector<Vertex> seq);

  /// Canonical rotation/reflection of a vertex sequence (no validation).
  static std::vector<Vertex> canonical(std::span<const Vertex> seq);

  const std::vector<Vertex>& sequence() const { return seq_; }
  int length() const { return static_cast<int>(seq_.size()); }
  VertexSet vertices() const { return set_; }
  bool lies_in(const Graph& g) const;

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.seq_ == b.seq_; }
  friend auto operator<=>(const Cycle& a, const Cycle& b) { return a.seq_ <=> b.seq_; }

 private:
  std::vector<Vertex> seq_;
  VertexSet set_;
};

/// Segments between consecutive vertices of s along c, starting at the first
/// vertex of s in the cycle's canonical order. Their count equals |V(c) ∩ s|.
/// Throws PreconditionError if c meets s fewer than twice.
std::vector<PathSegment> parts(const Cycle& c, VertexSet s);

/// The two v-tails of p: (p up to v, p from v). Throws if v is not on p.
std::pair<PathSegment, PathSegment> tails(const PathSegment& p, Vertex v);

struct Undefined {
  friend bool operator==(Undefined, Undefined) { return true; }
};
using JoinResult = std::variant<Undefined, PathSegment, Cycle>;

/// p·q: the union of both paths if it is a path or a cycle, Undefined otherwise.
/// A path result starts at p's first vertex when that is an endpoint.
JoinResult join(const PathSegment& p, const PathSegment& q);

}  // namespace lct

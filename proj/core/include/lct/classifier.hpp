#pragma once

#include <optional>

#include "lct/cycles.hpp"
#include "lct/decomposition.hpp"
#include "lct/graph.hpp"

namespace lct {

struct Intersection {
  int count = 0;
  VertexSet at;
  friend bool operator==(const Intersection&, const Intersection&) = default;
};

/// |V(x) ∩ s| together with the intersection itself.
Intersection k_intersect(VertexSet x, VertexSet s);
inline Intersection k_intersect(const Cycle& c, VertexSet s) { return k_intersect(c.vertices(), s); }
inline Intersection k_intersect(const PathSegment& p, VertexSet s) { return k_intersect(p.vertices(), s); }

enum class Fencing { Crosses, Fenced };

/// Crosses iff s separates the vertex set of x in g.
Fencing cross_or_fence(const Graph& g, VertexSet x, VertexSet s);
inline Fencing cross_or_fence(const Graph& g, const Cycle& c, VertexSet s) {
  return cross_or_fence(g, c.vertices(), s);
}
inline Fencing cross_or_fence(const Graph& g, const PathSegment& p, VertexSet s) {
  return cross_or_fence(g, p.vertices(), s);
}

/// Same intersection with s.
inline bool s_equivalent(VertexSet x, VertexSet y, VertexSet s) { return (x & s) == (y & s); }
inline bool s_equivalent(const Cycle& x, const Cycle& y, VertexSet s) {
  return s_equivalent(x.vertices(), y.vertices(), s);
}
inline bool s_equivalent(const PathSegment& x, const PathSegment& y, VertexSet s) {
  return s_equivalent(x.vertices(), y.vertices(), s);
}

/// A node t of a full width-3 decomposition, optionally with a triple of its bag.
/// Holds a reference to the decomposition, which must outlive the context.
class BagContext {
 public:
  /// Throws PreconditionError unless td is full of width 3 and delta (if given)
  /// is a triple inside V_t.
  BagContext(const TreeDecomposition& td, Node t, std::optional<VertexSet> delta = std::nullopt);

  const TreeDecomposition& decomposition() const { return *td_; }
  Node node() const { return t_; }
  VertexSet bag() const { return td_->bag(t_); }
  const std::optional<VertexSet>& delta() const { return delta_; }
  BagContext with_delta(VertexSet delta) const { return BagContext(*td_, t_, delta); }

  /// Δ together with every vertex in a bag of the branch union at Δ.
  /// Throws PreconditionError when no delta is set.
  VertexSet inside_vertices() const;

 private:
  const TreeDecomposition* td_;
  Node t_;
  std::optional<VertexSet> delta_;
  VertexSet inside_;
};

enum class Side { Inside, Outside };

Side vertex_side(const BagContext& ctx, Vertex v);

/// Inside iff every vertex is inside. Requires p to meet Δ exactly at its two ends.
Side path_side(const BagContext& ctx, const PathSegment& p);

struct CyclePosture {
  enum class Tag { Inside, Outside, Jump };
  Tag tag = Tag::Inside;
  /// |V(C) ∩ Δ|; meaningful for every tag, in {2,3} for Jump.
  int ell = 0;
  VertexSet at;
  friend bool operator==(const CyclePosture&, const CyclePosture&) = default;
};

/// Classifies c by the sides of its Δ-parts. A cycle inside V_t is Inside.
/// Requires |V(c) ∩ Δ| >= 2.
CyclePosture cycle_posture(const BagContext& ctx, const Cycle& c);

}  // namespace lct

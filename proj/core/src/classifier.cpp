#include "lct/classifier.hpp"

#include "lct/connectivity.hpp"
#include "lct/errors.hpp"

namespace lct {

Intersection k_intersect(VertexSet x, VertexSet s) {
  const VertexSet at = x & s;
  return {at.size(), at};
}

Fencing cross_or_fence(const Graph& g, VertexSet x, VertexSet s) {
  return separates(g, s, x) ? Fencing::Crosses : Fencing::Fenced;
}

BagContext::BagContext(const TreeDecomposition& td, Node t, std::optional<VertexSet> delta)
    : td_(&td), t_(t), delta_(delta) {
  if (t < 0 || t >= td.node_count()) throw PreconditionError("node out of range");
  if (!td.is_full() || td.width() != 3) throw PreconditionError("classification needs a full decomposition of width 3");
  if (delta_) inside_ = *delta_ | branch_union(td, t, *delta_).vertices;
}

VertexSet BagContext::inside_vertices() const {
  if (!delta_) throw PreconditionError("bag context has no triple");
  return inside_;
}

Side vertex_side(const BagContext& ctx, Vertex v) {
  return ctx.inside_vertices().contains(v) ? Side::Inside : Side::Outside;
}

Side path_side(const BagContext& ctx, const PathSegment& p) {
  const VertexSet inside = ctx.inside_vertices();
  const VertexSet at = p.vertices() & *ctx.delta();
  if (at.size() != 2 || !at.contains(p.front()) || !at.contains(p.back()) || p.front() == p.back())
    throw PreconditionError("path must meet the triple exactly at its two ends");
  return p.vertices().subset_of(inside) ? Side::Inside : Side::Outside;
}

CyclePosture cycle_posture(const BagContext& ctx, const Cycle& c) {
  const VertexSet inside = ctx.inside_vertices();
  const VertexSet at = c.vertices() & *ctx.delta();
  if (at.size() < 2) throw PreconditionError("cycle meets the triple fewer than twice");
  CyclePosture out{CyclePosture::Tag::Inside, at.size(), at};
  if (c.vertices().subset_of(ctx.bag())) return out;
  bool any_inside = false, any_outside = false;
  for (const auto& part : parts(c, at)) {
    if (part.vertices().subset_of(inside))
      any_inside = true;
    else
      any_outside = true;
  }
  if (any_inside && any_outside)
    out.tag = CyclePosture::Tag::Jump;
  else if (any_outside)
    out.tag = CyclePosture::Tag::Outside;
  return out;
}

}  // namespace lct

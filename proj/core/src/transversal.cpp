#include "lct/transversal.hpp"

#include <algorithm>

#include "lct/errors.hpp"

namespace lct {

bool hits_all(VertexSet x, std::span<const VertexSet> sets) {
  return std::all_of(sets.begin(), sets.end(), [x](VertexSet s) { return s.intersects(x); });
}

namespace {

// First set of `size` vertices (lexicographic over ascending id lists) that hits all sets.
bool first_hitting_of_size(std::span<const VertexSet> sets, int n, int size, int from, VertexSet chosen,
                           VertexSet& out) {
  if (size == 0) {
    if (!hits_all(chosen, sets)) return false;
    out = chosen;
    return true;
  }
  for (Vertex v = from; v <= n - size; ++v) {
    VertexSet next = chosen;
    next.insert(v);
    if (first_hitting_of_size(sets, n, size - 1, v + 1, next, out)) return true;
  }
  return false;
}

// Depth-bounded cover search: branch on the vertices of the first unhit set.
bool cover_within(std::span<const VertexSet> sets, int budget, VertexSet chosen) {
  auto unhit = std::find_if(sets.begin(), sets.end(), [chosen](VertexSet s) { return !s.intersects(chosen); });
  if (unhit == sets.end()) return true;
  if (budget == 0) return false;
  for (Vertex v : *unhit) {
    VertexSet next = chosen;
    next.insert(v);
    if (cover_within(sets, budget - 1, next)) return true;
  }
  return false;
}

}  // namespace

VertexSet min_hitting_set(std::span<const VertexSet> sets, int n) {
  if (sets.empty()) throw PreconditionError("hitting set of an empty family");
  for (auto s : sets)
    if (s.empty()) throw PreconditionError("family holds an empty set");
  VertexSet out;
  for (int size = 1; size <= std::min(3, n); ++size)
    if (first_hitting_of_size(sets, n, size, 0, {}, out)) return out;
  int size = 4;
  while (!cover_within(sets, size, {})) ++size;
  first_hitting_of_size(sets, n, size, 0, {}, out);
  return out;
}

TransversalResult transversal_of(LongestCycleSet family, int n) {
  if (family.cycles.empty()) throw PreconditionError("graph has no cycle");
  const auto sets = family.vertex_sets();
  TransversalResult out;
  out.witness = min_hitting_set(sets, n);
  out.lct = out.witness.size();
  out.family = std::move(family);
  return out;
}

TransversalResult compute_lct(const Graph& g, const EnumerationOptions& opts) {
  return transversal_of(enumerate_longest_cycles(g, opts), g.order());
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::PremiseNotMet: return "premise-not-met";
    case Outcome::VacuousPass: return "vacuous-pass";
  }
  return "unknown";
}

}  // namespace lct

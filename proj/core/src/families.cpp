#include "lct/families.hpp"

#include <algorithm>
#include <map>

#include "lct/connectivity.hpp"
#include "lct/errors.hpp"
#include "lct/treewidth.hpp"

namespace lct {

std::vector<int> TripleFamilies::jumping() const {
  std::vector<int> out = three_jump;
  for (const auto& f : two_jump) out.insert(out.end(), f.begin(), f.end());
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet TripleFamilies::pair(int i) const {
  const auto v = delta.to_vector();
  static constexpr int kPairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};
  return VertexSet{v[kPairs[i][0]], v[kPairs[i][1]]};
}

namespace {

std::array<VertexSet, 4> triples_of(VertexSet bag) {
  std::array<VertexSet, 4> out;
  int i = 0;
  for (Vertex v : bag) out[i++] = bag - VertexSet{v};
  std::sort(out.begin(), out.end());
  return out;
}

int pair_index(const TripleFamilies& f, VertexSet at) {
  for (int i = 0; i < 3; ++i)
    if (f.pair(i) == at) return i;
  return -1;
}

void require_width3_setting(const Graph& g, const TreeDecomposition& td, int treewidth) {
  if (!is_biconnected(g)) throw PreconditionError("graph is not 2-connected");
  if (treewidth != 3) throw PreconditionError("graph treewidth is " + std::to_string(treewidth) + ", not 3");
  if (!td.is_full() || td.width() != 3) throw PreconditionError("a full decomposition of width 3 is required");
}

// Cycles fenced by `bag` meeting it at most three times.
std::vector<int> fenced_three(const Graph& g, VertexSet bag, const LongestCycleSet& lcs) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(lcs.cycles.size()); ++i) {
    const VertexSet vs = lcs.cycles[i].vertices();
    if ((vs & bag).size() <= 3 && !separates(g, bag, vs)) out.push_back(i);
  }
  return out;
}

}  // namespace

CycleFamilies build_families(const Graph& g, const BagContext& ctx, const LongestCycleSet& lcs) {
  CycleFamilies out;
  out.t = ctx.node();
  out.bag = ctx.bag();
  const auto deltas = triples_of(out.bag);
  std::vector<BagContext> contexts;
  for (int j = 0; j < 4; ++j) {
    out.triples[j].delta = deltas[j];
    contexts.push_back(ctx.with_delta(deltas[j]));
  }

  for (int i = 0; i < static_cast<int>(lcs.cycles.size()); ++i) {
    const Cycle& c = lcs.cycles[i];
    const VertexSet vs = c.vertices();
    const VertexSet at = vs & out.bag;
    const bool crosses = separates(g, out.bag, vs);
    if (crosses && at.size() == 2) out.x2.push_back(i);
    if (!crosses && at.size() <= 3) out.fenced3.push_back(i);
    for (int j = 0; j < 4; ++j) {
      TripleFamilies& f = out.triples[j];
      if (at == f.delta) f.three_at_delta.push_back(i);
      const VertexSet on_delta = vs & f.delta;
      if (on_delta.size() < 2) continue;
      const CyclePosture p = cycle_posture(contexts[j], c);
      if (p.tag != CyclePosture::Tag::Jump) continue;
      if (p.ell == 2)
        f.two_jump[pair_index(f, on_delta)].push_back(i);
      else
        f.three_jump.push_back(i);
    }
  }
  return out;
}

ComponentFamily component_family(const Graph& g, const BagContext& ctx) {
  if (!ctx.delta()) throw PreconditionError("component family needs a triple");
  const TreeDecomposition& td = ctx.decomposition();
  const VertexSet delta = *ctx.delta();
  BranchMap map(td, ctx.node());
  ComponentFamily out;
  for (VertexSet comp : components_after_removal(g, ctx.bag())) {
    const int b = map.of_vertex(comp.front());
    if (b < 0) continue;
    const Node anchor = map.root_of(b);
    if (delta.subset_of(td.bag(anchor))) out.members.push_back({comp, anchor});
  }
  return out;
}

FencedReport check_fenced_or_transversal(const Graph& g, const TreeDecomposition& td, const TransversalResult& tr, int treewidth) {
  require_width3_setting(g, td, treewidth);
  FencedReport out;
  for (Node t = 0; t < td.node_count(); ++t) {
    FencedReport::NodeResult r;
    r.t = t;
    const VertexSet bag = td.bag(t);
    for (const auto& c : tr.family.cycles) {
      const VertexSet vs = c.vertices();
      const int k = (vs & bag).size();
      const bool crosses = separates(g, bag, vs);
      if (crosses && k == 2) ++r.x2;
      if (!crosses && k <= 3) ++r.fenced3;
    }
    r.pass = tr.lct == 1 || r.fenced3 > 0;
    if (!r.pass) out.failing.push_back(t);
    out.nodes.push_back(r);
  }
  out.outcome = out.failing.empty() ? Outcome::Pass : Outcome::Fail;
  return out;
}

FencedReport check_fenced_or_transversal(const Graph& g, const TreeDecomposition& td, const TransversalResult& tr) {
  return check_fenced_or_transversal(g, td, tr, exact_treewidth(g).width);
}

PairwiseCommonReport check_pairwise_and_common(const Graph& g, const BagContext& ctx, const LongestCycleSet& lcs) {
  return check_pairwise_and_common(g, ctx, lcs, build_families(g, BagContext(ctx.decomposition(), ctx.node()), lcs));
}

PairwiseCommonReport check_pairwise_and_common(const Graph& g, const BagContext& ctx, const LongestCycleSet& lcs,
                                               const CycleFamilies& fams) {
  if (!ctx.delta()) throw PreconditionError("check needs a triple");
  if (fams.t != ctx.node()) throw PreconditionError("families belong to another node");
  PairwiseCommonReport out;
  const TripleFamilies* f = nullptr;
  for (const auto& tf : fams.triples)
    if (tf.delta == *ctx.delta()) f = &tf;
  if (!f) throw PreconditionError("triple is not inside the bag");

  for (int i = 0; i < 3; ++i) out.two_jump_sizes[i] = static_cast<int>(f->two_jump[i].size());
  out.three_jump_size = static_cast<int>(f->three_jump.size());
  if (std::any_of(out.two_jump_sizes.begin(), out.two_jump_sizes.end(), [](int s) { return s == 0; })) {
    out.outcome = Outcome::PremiseNotMet;
    return out;
  }

  // Distinct vertex sets of the jumping cycles with multiplicities.
  std::map<VertexSet, int> sets;
  for (int i : f->jumping()) ++sets[lcs.cycles[i].vertices()];

  for (const auto& member : component_family(g, ctx).members) {
    const VertexSet a = member.component;
    bool ok = true;
    for (auto it = sets.begin(); it != sets.end() && ok; ++it) {
      if (it->second > 1 && !it->first.intersects(a)) ok = false;
      for (auto jt = std::next(it); jt != sets.end() && ok; ++jt)
        if (!(it->first & jt->first).intersects(a)) ok = false;
    }
    if (ok) {
      out.component = a;
      break;
    }
  }
  out.pairwise_ok = out.component.has_value();

  VertexSet common = ctx.inside_vertices();
  for (const auto& [vs, count] : sets) common = common & vs;
  if (!common.empty()) out.common_vertex = common.front();
  out.common_ok = out.common_vertex.has_value();

  out.outcome = out.pairwise_ok && out.common_ok ? Outcome::Pass : Outcome::Fail;
  return out;
}

JumpExclusionReport check_jump_exclusion(const Graph& g, const BagContext& ctx, const TransversalResult& tr) {
  if (!ctx.delta()) throw PreconditionError("check needs a triple");
  JumpExclusionReport out;
  if (tr.lct <= 1) return out;
  const VertexSet delta = *ctx.delta();
  const LongestCycleSet& lcs = tr.family;

  TripleFamilies pairs;
  pairs.delta = delta;
  std::array<bool, 3> seen{};
  for (const auto& c : lcs.cycles) {
    const VertexSet on = c.vertices() & delta;
    if (on.size() != 2) continue;
    const auto p = cycle_posture(ctx, c);
    if (p.tag == CyclePosture::Tag::Jump) seen[pair_index(pairs, on)] = true;
  }
  if (!(seen[0] && seen[1] && seen[2])) return out;

  for (int i = 0; i < static_cast<int>(lcs.cycles.size()); ++i) {
    const Cycle& c = lcs.cycles[i];
    const VertexSet vs = c.vertices();
    int clause = -1;
    if ((vs & ctx.bag()).size() <= 1) {
      clause = 0;
    } else if ((vs & delta).size() >= 2) {
      const auto p = cycle_posture(ctx, c);
      if (p.tag == CyclePosture::Tag::Outside)
        clause = 1;
      else if (p.tag == CyclePosture::Tag::Inside && p.ell == 2)
        clause = 2;
      else if (p.tag == CyclePosture::Tag::Inside && p.ell == 3 && cross_or_fence(g, vs, delta) == Fencing::Fenced)
        clause = 3;
    }
    if (clause >= 0) {
      out.witness = i;
      out.clause = clause;
      break;
    }
  }
  out.outcome = out.witness >= 0 ? Outcome::Pass : Outcome::Fail;
  return out;
}

Outcome check_two_cross_claim(const Graph& g, const BagContext& ctx, const TransversalResult& tr) {
  if (tr.lct <= 1) return Outcome::VacuousPass;
  const VertexSet bag = ctx.bag();
  std::vector<const Cycle*> x2;
  for (const auto& c : tr.family.cycles)
    if ((c.vertices() & bag).size() == 2 && separates(g, bag, c.vertices())) x2.push_back(&c);
  if (x2.empty()) return Outcome::PremiseNotMet;
  const VertexSet ab = x2.front()->vertices() & bag;
  for (const Cycle* c : x2)
    if ((c->vertices() & bag) != ab) return Outcome::PremiseNotMet;
  const auto rest = (bag - ab).to_vector();
  const BagContext abc = ctx.with_delta(ab | VertexSet{rest[0]});
  const BagContext abd = ctx.with_delta(ab | VertexSet{rest[1]});
  for (const Cycle* c : x2)
    if (cycle_posture(abc, *c).tag != CyclePosture::Tag::Jump || cycle_posture(abd, *c).tag != CyclePosture::Tag::Jump)
      return Outcome::Fail;
  return Outcome::Pass;
}

DirectedForest directed_forest(const Graph& g, const TreeDecomposition& td, const LongestCycleSet& lcs) {
  require_width3_setting(g, td, exact_treewidth(g).width);
  const int nodes = td.node_count();
  std::vector<std::vector<Node>> out_arcs(nodes);
  DirectedForest out;
  for (Node t = 0; t < nodes; ++t) {
    BranchMap map(td, t);
    std::vector<bool> hit(map.branch_count(), false);
    for (int i : fenced_three(g, td.bag(t), lcs)) {
      const VertexSet outside = lcs.cycles[i].vertices() - td.bag(t);
      if (!outside.empty()) hit[map.of_vertex(outside.front())] = true;
    }
    for (int b = 0; b < map.branch_count(); ++b)
      if (hit[b]) {
        out.arcs.emplace_back(t, map.root_of(b));
        out_arcs[t].push_back(map.root_of(b));
      }
    if (out_arcs[t].empty()) out.sinks.push_back(t);
  }
  for (auto [s, t] : out.arcs)
    if (s < t && std::find(out_arcs[t].begin(), out_arcs[t].end(), s) != out_arcs[t].end())
      out.antipodal.emplace_back(s, t);

  Node start = -1;
  for (Node t = 0; t < nodes && start < 0; ++t)
    if (!out_arcs[t].empty()) start = t;
  if (start < 0) return out;
  std::vector<bool> visited(nodes, false);
  out.maximal_path.push_back(start);
  visited[start] = true;
  for (Node cur = start;;) {
    Node next = -1;
    for (Node r : out_arcs[cur])
      if (!visited[r]) {
        next = r;
        break;
      }
    if (next < 0) break;
    visited[next] = true;
    out.maximal_path.push_back(next);
    cur = next;
  }
  if (out.maximal_path.size() >= 2) {
    const Node a = out.maximal_path[out.maximal_path.size() - 2];
    const Node b = out.maximal_path.back();
    out.halts_at_antipodal = std::find(out_arcs[b].begin(), out_arcs[b].end(), a) != out_arcs[b].end();
  }
  return out;
}

}  // namespace lct

#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "lct/classifier.hpp"
#include "lct/decomposition.hpp"
#include "lct/graph.hpp"
#include "lct/longest_cycles.hpp"
#include "lct/transversal.hpp"

namespace lct {

/// Longest-cycle families attached to one triple Δ = {a < b < c} of a bag.
/// Entries are indices into LongestCycleSet::cycles.
struct TripleFamilies {
  VertexSet delta;
  /// Cycles meeting V_t exactly in Δ.
  std::vector<int> three_at_delta;
  /// Cycles that 2-jump Δ at {a,b}, {b,c} and {a,c}, in that order.
  std::array<std::vector<int>, 3> two_jump;
  /// Cycles that 3-jump Δ.
  std::vector<int> three_jump;

  /// Union of the jump families, ascending.
  std::vector<int> jumping() const;
  /// The pair of Δ behind two_jump[i].
  VertexSet pair(int i) const;
};

struct CycleFamilies {
  Node t = -1;
  VertexSet bag;
  /// Cycles that cross V_t and meet it in exactly two vertices.
  std::vector<int> x2;
  /// Cycles fenced by V_t that meet it at most three times.
  std::vector<int> fenced3;
  /// One entry per triple of V_t, ordered by vertex-set mask.
  std::array<TripleFamilies, 4> triples;
};

/// Classifies every cycle of `lcs` against the bag of ctx.node().
CycleFamilies build_families(const Graph& g, const BagContext& ctx, const LongestCycleSet& lcs);

/// Components of G - V_t lying in the branch union at Δ, each with the
/// neighbour t* of t whose branch holds it.
struct ComponentFamily {
  struct Member {
    VertexSet component;
    Node anchor = -1;
  };
  std::vector<Member> members;
};

/// Requires a context with a triple.
ComponentFamily component_family(const Graph& g, const BagContext& ctx);

struct FencedReport {
  struct NodeResult {
    Node t = -1;
    int x2 = 0;
    int fenced3 = 0;
    bool pass = false;
  };
  Outcome outcome = Outcome::Pass;
  std::vector<NodeResult> nodes;
  std::vector<Node> failing;
};

/// Per node: lct = 1 or some longest cycle is fenced by V_t and meets it at
/// most three times. Requires g 2-connected with treewidth 3 and td full of
/// width 3; `treewidth` is tw(g), computed by the caller.
FencedReport check_fenced_or_transversal(const Graph& g, const TreeDecomposition& td, const TransversalResult& tr, int treewidth);
/// Same, computing tw(g) exactly.
FencedReport check_fenced_or_transversal(const Graph& g, const TreeDecomposition& td, const TransversalResult& tr);

struct PairwiseCommonReport {
  Outcome outcome = Outcome::PremiseNotMet;
  std::array<int, 3> two_jump_sizes{};
  int three_jump_size = 0;
  /// Component of the component family containing a vertex of every pairwise intersection.
  std::optional<VertexSet> component;
  /// Smallest vertex inside Δ lying on every jumping cycle.
  std::optional<Vertex> common_vertex;
  bool pairwise_ok = false;
  bool common_ok = false;
};

/// When every 2-jump family at Δ is non-empty: the jumping cycles pairwise
/// meet inside one component of the component family, and share a vertex
/// inside Δ. Otherwise PremiseNotMet. Requires a context with a triple.
PairwiseCommonReport check_pairwise_and_common(const Graph& g, const BagContext& ctx, const LongestCycleSet& lcs);
/// Same, reusing families already built at ctx.node().
PairwiseCommonReport check_pairwise_and_common(const Graph& g, const BagContext& ctx, const LongestCycleSet& lcs,
                                               const CycleFamilies& fams);

struct JumpExclusionReport {
  Outcome outcome = Outcome::PremiseNotMet;
  /// Index of a witnessing longest cycle and the clause it meets:
  /// 0 = meets V_t at most once, 1 = outside Δ, 2 = inside and meets Δ twice,
  /// 3 = inside, meets Δ three times and fenced by Δ.
  int witness = -1;
  int clause = -1;
};

/// Premise: lct > 1 and every pair of Δ has a cycle 2-jumping Δ there.
JumpExclusionReport check_jump_exclusion(const Graph& g, const BagContext& ctx, const TransversalResult& tr);

/// At a node whose 2-crossing cycles are all V_t-equivalent (at {a,b}) while
/// lct > 1: each of them jumps both {a,b,c} and {a,b,d}.
Outcome check_two_cross_claim(const Graph& g, const BagContext& ctx, const TransversalResult& tr);

/// Orientation of tree edges: t -> t' iff some cycle fenced by V_t meeting it
/// at most three times lies in the branch Br_t(t').
struct DirectedForest {
  std::vector<std::pair<Node, Node>> arcs;
  /// Nodes without outgoing arcs.
  std::vector<Node> sinks;
  /// Tree edges oriented both ways, as (s, t) with s < t.
  std::vector<std::pair<Node, Node>> antipodal;
  /// A maximal directed path from the smallest node with an outgoing arc.
  std::vector<Node> maximal_path;
  /// Whether the last arc of maximal_path is part of an antipodal pair.
  bool halts_at_antipodal = false;
};

/// Requires g 2-connected with treewidth 3 and td full of width 3.
DirectedForest directed_forest(const Graph& g, const TreeDecomposition& td, const LongestCycleSet& lcs);

}  // namespace lct

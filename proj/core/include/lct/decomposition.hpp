#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lct/graph.hpp"

namespace lct {

using Node = int;
using TreeEdge = std::pair<Node, Node>;

/// A tree T (nodes 0..N-1) with one bag of graph vertices per node.
///
/// Construction does not check the decomposition conditions; use validate().
/// `full` records a claim that every bag has width+1 vertices and adjacent bags
/// share exactly width vertices; validate() checks the claim.
class TreeDecomposition {
 public:
  TreeDecomposition() = default;
  TreeDecomposition(std::vector<VertexSet> bags, std::vector<TreeEdge> tree_edges, bool full = false);

  int node_count() const { return static_cast<int>(bags_.size()); }
  VertexSet bag(Node t) const { return bags_[t]; }
  const std::vector<VertexSet>& bags() const { return bags_; }
  /// Tree edges as (s, t) with s < t, sorted.
  const std::vector<TreeEdge>& tree_edges() const { return edges_; }
  /// Tree neighbours of t, ascending.
  const std::vector<Node>& tree_neighbors(Node t) const { return adj_[t]; }
  bool tree_adjacent(Node s, Node t) const;

  /// Max bag size minus one (-1 for no nodes).
  int width() const;
  bool is_full() const { return full_; }

  /// Nodes whose bag contains v, ascending.
  std::vector<Node> nodes_containing(Vertex v) const;

 private:
  std::vector<VertexSet> bags_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<Node>> adj_;
  bool full_ = false;
};

struct Violation {
  enum class Kind {
    BagVertexOutOfRange,
    NotATree,
    VertexUncovered,
    EdgeUncovered,
    VertexSubtreeDisconnected,
    BagSizeNotFull,
    IntersectionNotFull,
  };
  Kind kind;
  /// Offending vertex, node or edge endpoint; -1 where not applicable.
  int first = -1;
  int second = -1;

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Same tree with graph vertex v renamed perm[v] in every bag.
TreeDecomposition relabeled(const TreeDecomposition& td, std::span<const int> perm);

/// Checks the three decomposition conditions, tree shape, and fullness when
/// td.is_full() claims it. Empty result means valid.
std::vector<Violation> validate(const Graph& g, const TreeDecomposition& td);

/// A component of T - t. `vertices` are graph vertices in its bags minus V_t.
/// An empty node list is the empty branch used for sets inside V_t.
struct Branch {
  Node anchor = -1;
  std::vector<Node> nodes;
  VertexSet vertices;

  bool empty() const { return nodes.empty(); }
  friend bool operator==(const Branch&, const Branch&) = default;
};

/// Precomputed branch structure of T at one node t.
class BranchMap {
 public:
  BranchMap(const TreeDecomposition& td, Node t);

  Node anchor() const { return t_; }
  /// Branch index (position of the neighbour in tree_neighbors(t)), -1 for t itself.
  int of_node(Node s) const { return node_branch_[s]; }
  /// Branch index of a vertex outside V_t; -1 for vertices of V_t or vertices in no bag.
  int of_vertex(Vertex v) const { return vertex_branch_[v]; }
  int branch_count() const { return static_cast<int>(neighbors_.size()); }
  /// The neighbour t' with Br_t(t') equal to branch i.
  Node root_of(int i) const { return neighbors_[i]; }
  const Branch& branch(int i) const { return branches_[i]; }

 private:
  Node t_;
  std::vector<Node> neighbors_;
  std::vector<int> node_branch_;
  std::vector<int> vertex_branch_;
  std::vector<Branch> branches_;
};

/// Br_t(t2): the component of T - t holding node t2 (t2 != t).
Branch branch_at_node(const TreeDecomposition& td, Node t, Node t2);
/// Br_t(v) for a vertex v outside V_t. Throws PreconditionError if v is in V_t.
Branch branch_at_vertex(const TreeDecomposition& td, Node t, Vertex v);
/// Br_t(X) for a vertex set whose vertices outside V_t share one branch
/// (e.g. a path or cycle fenced by V_t). Returns the empty branch if X is inside V_t.
/// Throws PreconditionError if X meets two branches.
Branch branch_of_set(const TreeDecomposition& td, Node t, VertexSet x);

/// Union of Br_t(t') over neighbours t' of t whose bag contains delta.
/// Requires a full width-3 decomposition and a triple delta inside V_t.
Branch branch_union(const TreeDecomposition& td, Node t, VertexSet delta);

/// For tree edge (t, t2) and u in Br_t(t2) \ V_t, v in Br_t2(t) \ V_t2: does
/// V_t ∩ V_t2 separate u and v in g? Throws PreconditionError otherwise.
bool check_separator_property(const Graph& g, const TreeDecomposition& td, Node t, Node t2, Vertex u, Vertex v);

/// Turns a valid decomposition of width <= k into a full one of width exactly k:
/// contracts bags contained in a neighbour, pads small bags from a neighbour
/// (smallest vertex id first), then bridges thin tree edges with chains of
/// single-swap bags. Requires g.order() >= k + 1.
TreeDecomposition make_full(const Graph& g, const TreeDecomposition& td, int k);

/// Full decomposition of width k from an exact optimal one.
/// Throws PreconditionError if tw(g) > k or g.order() < k + 1.
TreeDecomposition full_tree_decomposition(const Graph& g, int k);

}  // namespace lct

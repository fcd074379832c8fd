#include "lct/decomposition.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "lct/connectivity.hpp"
#include "lct/errors.hpp"
#include "lct/treewidth.hpp"

namespace lct {

TreeDecomposition::TreeDecomposition(std::vector<VertexSet> bags, std::vector<TreeEdge> tree_edges, bool full)
    : bags_(std::move(bags)), adj_(bags_.size()), full_(full) {
  const int n = node_count();
  for (auto [s, t] : tree_edges) {
    if (s < 0 || t < 0 || s >= n || t >= n || s == t)
      throw PreconditionError("tree edge " + std::to_string(s) + "-" + std::to_string(t) + " is not between two nodes");
    if (s > t) std::swap(s, t);
    edges_.emplace_back(s, t);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [s, t] : edges_) {
    adj_[s].push_back(t);
    adj_[t].push_back(s);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool TreeDecomposition::tree_adjacent(Node s, Node t) const {
  return std::binary_search(adj_[s].begin(), adj_[s].end(), t);
}

int TreeDecomposition::width() const {
  int w = -1;
  for (auto b : bags_) w = std::max(w, b.size() - 1);
  return w;
}

std::vector<Node> TreeDecomposition::nodes_containing(Vertex v) const {
  std::vector<Node> out;
  for (Node t = 0; t < node_count(); ++t)
    if (bags_[t].contains(v)) out.push_back(t);
  return out;
}

std::string Violation::describe() const {
  auto pair = [&] { return std::to_string(first) + "-" + std::to_string(second); };
  switch (kind) {
    case Kind::BagVertexOutOfRange: return "bag of node " + std::to_string(first) + " holds an out-of-range vertex";
    case Kind::NotATree: return "decomposition graph is not a tree";
    case Kind::VertexUncovered: return "vertex " + std::to_string(first) + " is in no bag";
    case Kind::EdgeUncovered: return "edge " + pair() + " is in no bag";
    case Kind::VertexSubtreeDisconnected:
      return "nodes holding vertex " + std::to_string(first) + " are not connected in the tree";
    case Kind::BagSizeNotFull: return "bag of node " + std::to_string(first) + " has size != width+1";
    case Kind::IntersectionNotFull: return "tree edge " + pair() + " shares != width vertices";
  }
  return "unknown violation";
}

namespace {

// Connected components of the tree restricted to `keep` nodes, counted from `start`.
std::vector<bool> tree_reach(const TreeDecomposition& td, Node start, const std::vector<bool>& keep) {
  std::vector<bool> seen(td.node_count(), false);
  std::vector<Node> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    Node s = stack.back();
    stack.pop_back();
    for (Node r : td.tree_neighbors(s))
      if (keep[r] && !seen[r]) {
        seen[r] = true;
        stack.push_back(r);
      }
  }
  return seen;
}

}  // namespace

std::vector<Violation> validate(const Graph& g, const TreeDecomposition& td) {
  using K = Violation::Kind;
  std::vector<Violation> out;
  const int nodes = td.node_count();
  const VertexSet all = g.vertices();

  for (Node t = 0; t < nodes; ++t)
    if (!td.bag(t).subset_of(all)) out.push_back({K::BagVertexOutOfRange, t});

  bool tree = nodes == 0 ? g.order() == 0 : static_cast<int>(td.tree_edges().size()) == nodes - 1;
  if (tree && nodes > 0) {
    auto seen = tree_reach(td, 0, std::vector<bool>(nodes, true));
    tree = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }
  if (!tree) out.push_back({K::NotATree});

  VertexSet covered;
  for (auto b : td.bags()) covered = covered | b;
  for (Vertex v : all - covered) out.push_back({K::VertexUncovered, v});

  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (auto b : td.bags())
      if (b.contains(u) && b.contains(v)) {
        found = true;
        break;
      }
    if (!found) out.push_back({K::EdgeUncovered, u, v});
  }

  for (Vertex v : covered & all) {
    std::vector<bool> keep(nodes, false);
    Node first = -1;
    int count = 0;
    for (Node t = 0; t < nodes; ++t)
      if (td.bag(t).contains(v)) {
        keep[t] = true;
        ++count;
        if (first < 0) first = t;
      }
    auto seen = tree_reach(td, first, keep);
    if (std::count(seen.begin(), seen.end(), true) != count) out.push_back({K::VertexSubtreeDisconnected, v});
  }

  if (td.is_full()) {
    const int w = td.width();
    for (Node t = 0; t < nodes; ++t)
      if (td.bag(t).size() != w + 1) out.push_back({K::BagSizeNotFull, t});
    for (auto [s, t] : td.tree_edges())
      if ((td.bag(s) & td.bag(t)).size() != w) out.push_back({K::IntersectionNotFull, s, t});
  }
  return out;
}

BranchMap::BranchMap(const TreeDecomposition& td, Node t)
    : t_(t),
      neighbors_(td.tree_neighbors(t)),
      node_branch_(td.node_count(), -1),
      vertex_branch_(kMaxVertices, -1) {
  const VertexSet own = td.bag(t);
  for (int i = 0; i < static_cast<int>(neighbors_.size()); ++i) {
    Branch br;
    br.anchor = t;
    std::vector<Node> stack{neighbors_[i]};
    node_branch_[neighbors_[i]] = i;
    while (!stack.empty()) {
      Node s = stack.back();
      stack.pop_back();
      br.nodes.push_back(s);
      br.vertices = br.vertices | (td.bag(s) - own);
      for (Node r : td.tree_neighbors(s))
        if (r != t && node_branch_[r] < 0) {
          node_branch_[r] = i;
          stack.push_back(r);
        }
    }
    std::sort(br.nodes.begin(), br.nodes.end());
    for (Vertex v : br.vertices) vertex_branch_[v] = i;
    branches_.push_back(std::move(br));
  }
}

Branch branch_at_node(const TreeDecomposition& td, Node t, Node t2) {
  if (t == t2) throw PreconditionError("branch of a node at itself is undefined");
  BranchMap map(td, t);
  return map.branch(map.of_node(t2));
}

Branch branch_at_vertex(const TreeDecomposition& td, Node t, Vertex v) {
  if (td.bag(t).contains(v))
    throw PreconditionError("vertex " + std::to_string(v) + " lies in the bag of node " + std::to_string(t));
  BranchMap map(td, t);
  if (map.of_vertex(v) < 0) throw PreconditionError("vertex " + std::to_string(v) + " is in no bag");
  return map.branch(map.of_vertex(v));
}

Branch branch_of_set(const TreeDecomposition& td, Node t, VertexSet x) {
  VertexSet outside = x - td.bag(t);
  if (outside.empty()) return Branch{t, {}, {}};
  BranchMap map(td, t);
  int idx = map.of_vertex(outside.front());
  for (Vertex v : outside)
    if (map.of_vertex(v) != idx) throw PreconditionError("vertex set meets more than one branch");
  if (idx < 0) throw PreconditionError("vertex set holds a vertex in no bag");
  return map.branch(idx);
}

namespace {
void require_width3_triple(const TreeDecomposition& td, Node t, VertexSet delta) {
  if (!td.is_full() || td.width() != 3) throw PreconditionError("a full decomposition of width 3 is required");
  if (delta.size() != 3 || !delta.subset_of(td.bag(t)))
    throw PreconditionError("delta must be a triple inside the bag of node " + std::to_string(t));
}
}  // namespace

Branch branch_union(const TreeDecomposition& td, Node t, VertexSet delta) {
  require_width3_triple(td, t, delta);
  BranchMap map(td, t);
  Branch out{t, {}, {}};
  for (int i = 0; i < map.branch_count(); ++i) {
    if (!delta.subset_of(td.bag(map.root_of(i)))) continue;
    const Branch& b = map.branch(i);
    out.nodes.insert(out.nodes.end(), b.nodes.begin(), b.nodes.end());
    out.vertices = out.vertices | b.vertices;
  }
  std::sort(out.nodes.begin(), out.nodes.end());
  return out;
}

bool check_separator_property(const Graph& g, const TreeDecomposition& td, Node t, Node t2, Vertex u, Vertex v) {
  if (!td.tree_adjacent(t, t2)) throw PreconditionError("nodes are not adjacent in the tree");
  if (td.bag(t).contains(u)) throw PreconditionError("u lies in V_t");
  if (td.bag(t2).contains(v)) throw PreconditionError("v lies in V_t'");
  BranchMap at_t(td, t), at_t2(td, t2);
  if (at_t.of_vertex(u) < 0 || at_t.of_vertex(u) != at_t.of_node(t2)) throw PreconditionError("u is not in Br_t(t')");
  if (at_t2.of_vertex(v) < 0 || at_t2.of_vertex(v) != at_t2.of_node(t)) throw PreconditionError("v is not in Br_t'(t)");
  VertexSet uv;
  uv.insert(u);
  uv.insert(v);
  return separates(g, td.bag(t) & td.bag(t2), uv);
}

TreeDecomposition make_full(const Graph& g, const TreeDecomposition& td, int k) {
  if (g.order() < k + 1) throw PreconditionError("a full decomposition of width k needs at least k+1 vertices");
  if (!validate(g, TreeDecomposition(td.bags(), td.tree_edges())).empty())
    throw PreconditionError("input decomposition is not valid");
  if (td.width() > k) throw PreconditionError("input decomposition is wider than k");

  const int n0 = td.node_count();
  std::vector<VertexSet> bags = td.bags();
  std::vector<std::set<Node>> adj(n0);
  std::vector<bool> alive(n0, true);
  for (auto [s, t] : td.tree_edges()) {
    adj[s].insert(t);
    adj[t].insert(s);
  }

  auto contract_once = [&]() {
    for (Node s = 0; s < n0; ++s) {
      if (!alive[s]) continue;
      for (Node t : adj[s]) {
        if (!bags[s].subset_of(bags[t])) continue;
        for (Node r : adj[s])
          if (r != t) {
            adj[r].erase(s);
            adj[r].insert(t);
            adj[t].insert(r);
          }
        adj[t].erase(s);
        adj[s].clear();
        alive[s] = false;
        return true;
      }
    }
    return false;
  };

  auto pad_once = [&]() {
    for (Node s = 0; s < n0; ++s) {
      if (!alive[s] || bags[s].size() >= k + 1) continue;
      for (Node t : adj[s]) {
        VertexSet extra = bags[t] - bags[s];
        if (extra.empty()) continue;
        bags[s].insert(extra.front());
        return true;
      }
    }
    return false;
  };

  while (contract_once() || pad_once()) {
  }

  std::vector<Node> renumber(n0, -1);
  std::vector<VertexSet> out_bags;
  for (Node s = 0; s < n0; ++s)
    if (alive[s]) {
      renumber[s] = static_cast<Node>(out_bags.size());
      out_bags.push_back(bags[s]);
    }
  if (out_bags.size() == 1 && out_bags[0].size() != k + 1)
    throw PreconditionError("single-bag decomposition cannot be padded to width k");

  std::vector<TreeEdge> out_edges;
  for (Node s = 0; s < n0; ++s) {
    if (!alive[s]) continue;
    for (Node t : adj[s]) {
      if (t < s) continue;
      Node prev = renumber[s];
      VertexSet cur = bags[s];
      const VertexSet target = bags[t];
      while ((cur & target).size() < k) {
        cur.erase((cur - target).front());
        cur.insert((target - cur).front());
        Node mid = static_cast<Node>(out_bags.size());
        out_bags.push_back(cur);
        out_edges.emplace_back(prev, mid);
        prev = mid;
      }
      out_edges.emplace_back(prev, renumber[t]);
    }
  }
  return TreeDecomposition(std::move(out_bags), std::move(out_edges), true);
}

TreeDecomposition full_tree_decomposition(const Graph& g, int k) {
  if (g.order() < k + 1) throw PreconditionError("a full decomposition of width k needs at least k+1 vertices");
  auto tw = exact_treewidth(g);
  if (tw.width > k) throw PreconditionError("treewidth " + std::to_string(tw.width) + " exceeds k");
  return make_full(g, tw.decomposition, k);
}

TreeDecomposition relabeled(const TreeDecomposition& td, std::span<const int> perm) {
  std::vector<VertexSet> bags;
  bags.reserve(td.node_count());
  for (VertexSet b : td.bags()) {
    VertexSet nb;
    for (Vertex v : b) nb.insert(perm[v]);
    bags.push_back(nb);
  }
  return TreeDecomposition(std::move(bags), td.tree_edges(), td.is_full());
}

}  // namespace lct

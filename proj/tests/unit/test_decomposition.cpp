#include <doctest.h>

#include <algorithm>

#include "lct/connectivity.hpp"
#include "lct/decomposition.hpp"
#include "lct/errors.hpp"
#include "lct/generator.hpp"
#include "lct/graph6.hpp"
#include "lct/treewidth.hpp"
#include "oracles.hpp"

using namespace lct;

namespace {

Graph random_graph(Rng& rng, int n, double p) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.unit() < p) es.emplace_back(i, j);
  return Graph(n, es);
}

bool has_kind(const std::vector<Violation>& vs, Violation::Kind k) {
  return std::any_of(vs.begin(), vs.end(), [k](const Violation& v) { return v.kind == k; });
}

}  // namespace

TEST_SUITE("treewidth") {
  TEST_CASE("named graphs") {
    CHECK(exact_treewidth(named::complete(5)).width == 4);
    CHECK(exact_treewidth(named::cycle(8)).width == 2);
    CHECK(exact_treewidth(named::path(6)).width == 1);
    CHECK(exact_treewidth(Graph(3, {})).width == 0);
    CHECK(exact_treewidth(named::petersen()).width == 4);
    CHECK(exact_treewidth(named::separation_example()).width == 3);
  }

  TEST_CASE("agrees with the permutation oracle") {
    Rng rng(7);
    for (int trial = 0; trial < 120; ++trial) {
      const int n = rng.between(1, 8);
      const Graph g = random_graph(rng, n, 0.2 + 0.6 * rng.unit());
      const auto r = exact_treewidth(g);
      CAPTURE(write_graph6(g));
      CHECK(r.width == oracle::treewidth(g));
      CHECK(elimination_width(g, r.elimination_order) == r.width);
      const auto td = decomposition_from_order(g, r.elimination_order);
      CHECK(validate(g, td).empty());
      CHECK(td.width() == r.width);
    }
  }

  TEST_CASE("cap") { CHECK_THROWS_AS(exact_treewidth(named::cycle(30), 24), CapExceeded); }
}

TEST_SUITE("validation") {
  const Graph tri = named::complete(3);

  TEST_CASE("a valid decomposition") {
    TreeDecomposition td({VertexSet{0, 1}, VertexSet{1, 2, 0}}, {{0, 1}});
    CHECK(validate(tri, td).empty());
    CHECK(td.width() == 2);
  }

  TEST_CASE("each violation kind") {
    CHECK(has_kind(validate(tri, TreeDecomposition({VertexSet{0, 1, 2, 5}}, {})), Violation::Kind::BagVertexOutOfRange));
    CHECK(has_kind(validate(tri, TreeDecomposition({VertexSet{0, 1, 2}, VertexSet{0}}, {})), Violation::Kind::NotATree));
    CHECK(has_kind(validate(tri, TreeDecomposition({VertexSet{0, 1}}, {})), Violation::Kind::VertexUncovered));
    CHECK(has_kind(validate(tri, TreeDecomposition({VertexSet{0, 1}, VertexSet{1, 2}}, {{0, 1}})),
                   Violation::Kind::EdgeUncovered));
    const Graph p4 = named::path(4);
    CHECK(has_kind(validate(p4, TreeDecomposition({VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{2, 3, 0}}, {{0, 1}, {1, 2}})),
                   Violation::Kind::VertexSubtreeDisconnected));
    CHECK(validate(p4, TreeDecomposition({VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{2, 3}}, {{0, 1}, {1, 2}}, true)).empty());
    CHECK(has_kind(validate(named::path(5), TreeDecomposition({VertexSet{0, 1, 2}, VertexSet{2, 3, 4}}, {{0, 1}}, true)),
                   Violation::Kind::IntersectionNotFull));
    CHECK(has_kind(validate(p4, TreeDecomposition({VertexSet{0, 1, 2}, VertexSet{2, 3}}, {{0, 1}}, true)),
                   Violation::Kind::BagSizeNotFull));
    const Graph c4 = named::cycle(4);
    CHECK(has_kind(validate(c4, TreeDecomposition({VertexSet{0, 1, 2}, VertexSet{0, 2, 3}, VertexSet{0, 2, 3}, VertexSet{3, 0, 1}},
                                                  {{0, 1}, {1, 2}}, true)),
                   Violation::Kind::NotATree));
  }

  TEST_CASE("bad node ids in tree edges") {
    CHECK_THROWS_AS(TreeDecomposition({VertexSet{0}}, {{0, 3}}), PreconditionError);
  }
}

TEST_SUITE("full decompositions") {
  TEST_CASE("separation example: width 3, six bags") {
    const Graph g = named::separation_example();
    const auto td = full_tree_decomposition(g, 3);
    CHECK(td.is_full());
    CHECK(td.width() == 3);
    CHECK(td.node_count() == g.order() - 3);
    CHECK(validate(g, td).empty());
  }

  TEST_CASE("random graphs of small treewidth become full with n - k bags") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = rng.between(4, 12);
      const Graph g = random_graph(rng, n, 0.15 + 0.3 * rng.unit());
      const auto r = exact_treewidth(g);
      for (int k = std::max(1, r.width); k <= 4 && k + 1 <= n; ++k) {
        const auto td = make_full(g, r.decomposition, k);
        CHECK(validate(g, td).empty());
        CHECK(td.width() == k);
        CHECK(td.node_count() == n - k);
        for (VertexSet b : td.bags()) CHECK(b.size() == k + 1);
        for (auto [s, t] : td.tree_edges()) CHECK((td.bag(s) & td.bag(t)).size() == k);
      }
    }
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(full_tree_decomposition(named::complete(5), 3), PreconditionError);
    CHECK_THROWS_AS(full_tree_decomposition(named::complete(3), 3), PreconditionError);
  }

  TEST_CASE("relabeling keeps validity") {
    Rng rng(3);
    const auto gen = generate_k_tree(9, 3, rng);
    std::vector<int> perm{8, 7, 6, 5, 4, 3, 2, 1, 0};
    CHECK(validate(gen.graph.relabeled(perm), relabeled(gen.decomposition, perm)).empty());
  }
}

TEST_SUITE("branches") {
  // Path-shaped tree 0-1-2 plus a leaf 3 at node 1.
  const Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {0, 2}});
  const TreeDecomposition td({VertexSet{0, 1, 2}, VertexSet{1, 2, 3}, VertexSet{2, 3, 4}, VertexSet{1, 5}},
                             {{0, 1}, {1, 2}, {1, 3}});

  TEST_CASE("branch structure at the middle node") {
    REQUIRE(validate(g, td).empty());
    BranchMap map(td, 1);
    CHECK(map.branch_count() == 3);
    CHECK(map.of_node(1) == -1);
    CHECK(map.root_of(map.of_node(2)) == 2);
    CHECK(map.of_vertex(4) == map.of_node(2));
    CHECK(map.of_vertex(0) == map.of_node(0));
    CHECK(map.of_vertex(5) == map.of_node(3));
    CHECK(map.of_vertex(2) == -1);
    const Branch b = branch_at_node(td, 1, 2);
    CHECK(b.nodes == std::vector<Node>{2});
    CHECK(b.vertices == VertexSet{4});
    CHECK(branch_at_vertex(td, 1, 5).nodes == std::vector<Node>{3});
    CHECK_THROWS_AS(branch_at_vertex(td, 1, 2), PreconditionError);
    CHECK(branch_of_set(td, 1, VertexSet{1, 2}).empty());
    CHECK(branch_of_set(td, 1, VertexSet{2, 4}).nodes == std::vector<Node>{2});
    CHECK_THROWS_AS(branch_of_set(td, 1, VertexSet{0, 4}), PreconditionError);
  }

  TEST_CASE("branch sides agree with a plain tree search") {
    Rng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
      const auto gen = generate_k_tree(rng.between(4, 12), 3, rng);
      const auto& t = gen.decomposition;
      for (auto [a, b] : t.tree_edges()) {
        for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
          const auto nodes = branch_at_node(t, x, y).nodes;
          const auto want = oracle::side(t, x, y);
          CHECK(std::set<int>(nodes.begin(), nodes.end()) == want);
        }
      }
    }
  }
}

TEST_SUITE("branch union") {
  TEST_CASE("agrees with the oracle on generated 3-trees") {
    Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
      const auto gen = generate_k_tree(rng.between(4, 11), 3, rng);
      const auto& td = gen.decomposition;
      for (Node t = 0; t < td.node_count(); ++t)
        for (Vertex drop : td.bag(t)) {
          const VertexSet delta = td.bag(t) - VertexSet{drop};
          const Branch u = branch_union(td, t, delta);
          const auto want = oracle::inside_vertices(td, t, delta.to_vector());
          std::set<int> got(delta.begin(), delta.end());
          for (Vertex v : u.vertices) got.insert(v);
          CHECK(got == want);
        }
    }
  }

  TEST_CASE("needs a full width-3 decomposition and a triple of the bag") {
    const Graph k5 = named::complete(5);
    const auto td = full_tree_decomposition(k5, 4);
    CHECK_THROWS_AS(branch_union(td, 0, VertexSet{0, 1, 2}), PreconditionError);
    const auto td3 = full_tree_decomposition(named::separation_example(), 3);
    CHECK_THROWS_AS(branch_union(td3, 0, VertexSet{0, 1}), PreconditionError);
  }
}

TEST_SUITE("separator property") {
  TEST_CASE("holds for every qualifying pair of the separation example") {
    const Graph g = named::separation_example();
    const auto td = full_tree_decomposition(g, 3);
    long pairs = 0;
    for (auto [s, t] : td.tree_edges())
      for (Vertex u : branch_at_node(td, s, t).vertices)
        for (Vertex v : branch_at_node(td, t, s).vertices) {
          ++pairs;
          CHECK(check_separator_property(g, td, s, t, u, v));
          const VertexSet sep = td.bag(s) & td.bag(t);
          CHECK(oracle::separates(g, sep.to_vector(), {u, v}));
        }
    CHECK(pairs > 0);
  }

  TEST_CASE("preconditions") {
    const Graph g = named::separation_example();
    const auto td = full_tree_decomposition(g, 3);
    const auto [s, t] = td.tree_edges().front();
    const Vertex inside = (td.bag(s) & td.bag(t)).front();
    CHECK_THROWS_AS(check_separator_property(g, td, s, t, inside, inside), PreconditionError);
  }
}

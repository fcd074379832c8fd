#include <doctest.h>

#include "lct/decomposition.hpp"
#include "lct/errors.hpp"
#include "lct/families.hpp"
#include "lct/generator.hpp"
#include "lct/graph6.hpp"
#include "lct/longest_cycles.hpp"
#include "lct/transversal.hpp"
#include "lct/treewidth.hpp"
#include "oracles.hpp"

using namespace lct;
using I = named::SeparationExampleIds;

namespace {

Node node_with_bag(const TreeDecomposition& td, VertexSet bag) {
  for (Node t = 0; t < td.node_count(); ++t)
    if (td.bag(t) == bag) return t;
  return -1;
}

}  // namespace

TEST_SUITE("hitting sets") {
  TEST_CASE("agrees with the subset oracle") {
    Rng rng(123);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = rng.between(3, 11);
      const int count = rng.between(1, 9);
      std::vector<VertexSet> sets;
      std::set<std::vector<int>> fam;
      for (int i = 0; i < count; ++i) {
        VertexSet s;
        std::vector<int> sv;
        for (Vertex v = 0; v < n; ++v)
          if (rng.unit() < 0.25) {
            s.insert(v);
            sv.push_back(v);
          }
        if (s.empty()) {
          s.insert(0);
          sv.push_back(0);
        }
        sets.push_back(s);
        fam.insert(sv);
      }
      const VertexSet hs = min_hitting_set(sets, n);
      CHECK(hits_all(hs, sets));
      CHECK(hs.size() == oracle::min_transversal(fam, n));
    }
  }

  TEST_CASE("disjoint sets need one vertex each") {
    std::vector<VertexSet> sets{VertexSet{0, 1}, VertexSet{2, 3}, VertexSet{4, 5}, VertexSet{6, 7}, VertexSet{8, 9}};
    CHECK(min_hitting_set(sets, 10) == VertexSet{0, 2, 4, 6, 8});
  }

  TEST_CASE("preconditions") {
    std::vector<VertexSet> none;
    CHECK_THROWS_AS(min_hitting_set(none, 3), PreconditionError);
    std::vector<VertexSet> with_empty{VertexSet{}};
    CHECK_THROWS_AS(min_hitting_set(with_empty, 3), PreconditionError);
  }
}

TEST_SUITE("longest cycle transversal") {
  TEST_CASE("named graphs") {
    CHECK(compute_lct(named::complete(4)).lct == 1);
    CHECK(compute_lct(named::cycle(5)).lct == 1);
    const auto p = compute_lct(named::petersen());
    CHECK(p.lct == 2);
    CHECK(p.family.length == 9);
    std::vector<VertexSet> sets = p.family.vertex_sets();
    CHECK(hits_all(p.witness, sets));
    CHECK(p.witness.size() == 2);
    CHECK_THROWS_AS(compute_lct(named::path(4)), PreconditionError);
  }

  TEST_CASE("three disjoint triangles") {
    const Graph g(9, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {6, 7}, {7, 8}, {6, 8}});
    CHECK(compute_lct(g).lct == 3);
  }

  TEST_CASE("agrees with the oracle on random 2-connected graphs") {
    Rng rng(8);
    for (int trial = 0; trial < 80; ++trial) {
      const Graph g = oracle::random_biconnected(rng, rng.between(4, 9), 0.4);
      CAPTURE(write_graph6(g));
      const auto ref = oracle::all_cycles(g);
      CHECK(compute_lct(g).lct == oracle::min_transversal(ref.longest, g.order()));
    }
  }

  TEST_CASE("outcome names") {
    CHECK(to_string(Outcome::Pass) == "pass");
    CHECK(to_string(Outcome::Fail) == "fail");
    CHECK(to_string(Outcome::PremiseNotMet) == "premise-not-met");
    CHECK(to_string(Outcome::VacuousPass) == "vacuous-pass");
  }
}

TEST_SUITE("families") {
  const Graph fx = named::separation_example();
  const VertexSet s{I::a, I::b, I::c, I::d};

  TEST_CASE("components of the separation example at S") {
    const auto td = full_tree_decomposition(fx, 3);
    const Node t = node_with_bag(td, s);
    REQUIRE(t >= 0);
    const BagContext ctx(td, t, VertexSet{I::a, I::b, I::d});
    const auto cf = component_family(fx, ctx);
    std::vector<VertexSet> comps;
    for (const auto& m : cf.members) {
      comps.push_back(m.component);
      CHECK(ctx.delta()->subset_of(td.bag(m.anchor)));
    }
    std::sort(comps.begin(), comps.end(), [](VertexSet x, VertexSet y) { return x.front() < y.front(); });
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{I::v1});
    CHECK(comps[1] == VertexSet{I::v2});
    CHECK_THROWS_AS(component_family(fx, BagContext(td, t)), PreconditionError);
  }

  TEST_CASE("families partition consistently") {
    Rng rng(4);
    for (int trial = 0; trial < 40; ++trial) {
      const auto gen = generate_partial_k_tree(rng.between(6, 11), 3, 0.3, true, 1000, rng);
      const auto lcs = enumerate_longest_cycles(gen.graph);
      const auto& td = gen.decomposition;
      for (Node t = 0; t < td.node_count(); ++t) {
        const auto f = build_families(gen.graph, BagContext(td, t), lcs);
        CHECK(f.t == t);
        CHECK(f.bag == td.bag(t));
        const std::set<int> x2(f.x2.begin(), f.x2.end());
        for (int i : f.fenced3) CHECK_FALSE(x2.contains(i));
        for (int i : f.x2) CHECK((lcs.cycles[i].vertices() & f.bag).size() == 2);
        for (const auto& tf : f.triples) {
          CHECK(tf.delta.size() == 3);
          CHECK(tf.delta.subset_of(f.bag));
          for (int i = 0; i < 3; ++i) {
            CHECK(tf.pair(i).subset_of(tf.delta));
            for (int c : tf.two_jump[i]) CHECK((lcs.cycles[c].vertices() & tf.delta) == tf.pair(i));
          }
          for (int c : tf.three_jump) CHECK(tf.delta.subset_of(lcs.cycles[c].vertices()));
          for (int c : tf.three_at_delta) CHECK((lcs.cycles[c].vertices() & f.bag) == tf.delta);
        }
      }
    }
  }
}

TEST_SUITE("checks") {
  const Graph fx = named::separation_example();

  TEST_CASE("fenced-or-transversal holds on the separation example") {
    const auto td = full_tree_decomposition(fx, 3);
    const auto tr = compute_lct(fx);
    const auto rep = check_fenced_or_transversal(fx, td, tr);
    CHECK(rep.outcome == Outcome::Pass);
    CHECK(rep.nodes.size() == 6);
    CHECK(rep.failing.empty());
  }

  TEST_CASE("fenced-or-transversal preconditions") {
    const Graph k5 = named::complete(5);
    CHECK_THROWS_AS(check_fenced_or_transversal(k5, full_tree_decomposition(k5, 4), compute_lct(k5)), PreconditionError);
    const Graph p = named::petersen();
    const auto r = exact_treewidth(p);
    CHECK_THROWS_AS(check_fenced_or_transversal(p, make_full(p, r.decomposition, 4), compute_lct(p)), PreconditionError);
  }

  TEST_CASE("pairwise and common on K4 has no premise") {
    Rng rng(2);
    const auto gen = generate_k_tree(4, 3, rng);
    const auto lcs = enumerate_longest_cycles(gen.graph);
    const VertexSet bag = gen.decomposition.bag(0);
    const auto v = bag.to_vector();
    const BagContext ctx(gen.decomposition, 0, VertexSet{v[0], v[1], v[2]});
    CHECK(check_pairwise_and_common(gen.graph, ctx, lcs).outcome == Outcome::PremiseNotMet);
    CHECK_THROWS_AS(check_pairwise_and_common(gen.graph, BagContext(gen.decomposition, 0), lcs), PreconditionError);
  }

  TEST_CASE("pairwise and common whenever the premise holds") {
    Rng rng(11);
    long premise = 0;
    for (int trial = 0; trial < 3000 && premise == 0; ++trial) {
      const auto gen = generate_partial_k_tree(rng.between(5, 9), 3, 0.35, true, 1000, rng);
      const auto lcs = enumerate_longest_cycles(gen.graph);
      const auto& td = gen.decomposition;
      for (Node t = 0; t < td.node_count(); ++t) {
        const auto fams = build_families(gen.graph, BagContext(td, t), lcs);
        for (const auto& tf : fams.triples) {
          const auto rep = check_pairwise_and_common(gen.graph, BagContext(td, t, tf.delta), lcs, fams);
          if (rep.outcome == Outcome::PremiseNotMet) continue;
          ++premise;
          CHECK(rep.outcome == Outcome::Pass);
        }
      }
    }
    CHECK(premise > 0);
  }

  TEST_CASE("jump exclusion and two-cross claim are vacuous when one vertex suffices") {
    const auto td = full_tree_decomposition(fx, 3);
    const auto tr = compute_lct(fx);
    REQUIRE(tr.lct == 1);
    for (Node t = 0; t < td.node_count(); ++t) {
      CHECK(check_two_cross_claim(fx, BagContext(td, t), tr) == Outcome::VacuousPass);
      for (Vertex drop : td.bag(t))
        CHECK(check_jump_exclusion(fx, BagContext(td, t, td.bag(t) - VertexSet{drop}), tr).outcome ==
              Outcome::PremiseNotMet);
    }
  }

  TEST_CASE("directed forest of the separation example") {
    const auto td = full_tree_decomposition(fx, 3);
    const auto df = directed_forest(fx, td, enumerate_longest_cycles(fx));
    for (auto [s, t] : df.arcs) {
      const auto& edges = td.tree_edges();
      CHECK(std::any_of(edges.begin(), edges.end(), [&](auto e) {
        return (e.first == s && e.second == t) || (e.first == t && e.second == s);
      }));
    }
    for (Node t = 0; t < td.node_count(); ++t) {
      const bool out = std::any_of(df.arcs.begin(), df.arcs.end(), [t](auto a) { return a.first == t; });
      CHECK(out != (std::find(df.sinks.begin(), df.sinks.end(), t) != df.sinks.end()));
    }
    for (std::size_t i = 1; i < df.maximal_path.size(); ++i) {
      const std::pair<Node, Node> arc{df.maximal_path[i - 1], df.maximal_path[i]};
      CHECK(std::find(df.arcs.begin(), df.arcs.end(), arc) != df.arcs.end());
    }
    CHECK_THROWS_AS(directed_forest(named::petersen(), make_full(named::petersen(), exact_treewidth(named::petersen()).decomposition, 4),
                                    enumerate_longest_cycles(named::petersen())),
                    PreconditionError);
  }
}

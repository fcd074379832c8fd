#include <doctest.h>

#include "lct/classifier.hpp"
#include "lct/decomposition.hpp"
#include "lct/errors.hpp"
#include "lct/generator.hpp"
#include "lct/graph6.hpp"
#include "lct/longest_cycles.hpp"
#include "oracles.hpp"

using namespace lct;
using I = named::SeparationExampleIds;

namespace {

oracle::Posture expected(CyclePosture::Tag t) {
  switch (t) {
    case CyclePosture::Tag::Inside: return oracle::Posture::Inside;
    case CyclePosture::Tag::Outside: return oracle::Posture::Outside;
    case CyclePosture::Tag::Jump: return oracle::Posture::Jump;
  }
  return oracle::Posture::Inside;
}

}  // namespace

TEST_SUITE("crossing and fencing") {
  const Graph g = named::separation_example();
  const VertexSet s{I::a, I::b, I::c, I::d};

  TEST_CASE("k_intersect") {
    const auto r = k_intersect(VertexSet{I::a, I::v1, I::c}, s);
    CHECK(r.count == 2);
    CHECK(r.at == VertexSet{I::a, I::c});
    CHECK(k_intersect(VertexSet{I::v1}, s).count == 0);
  }

  TEST_CASE("stated classifications of the separation example") {
    const PathSegment p1({I::v1, I::a, I::v5});
    CHECK(p1.lies_in(g));
    CHECK(k_intersect(p1, s).count == 1);
    CHECK(cross_or_fence(g, p1, s) == Fencing::Crosses);

    const PathSegment p2({I::v3, I::c, I::d, I::b, I::v4});
    CHECK(p2.lies_in(g));
    CHECK(k_intersect(p2, s).count == 3);
    CHECK(cross_or_fence(g, p2, s) == Fencing::Fenced);

    const Cycle c1({I::v1, I::b, I::v2, I::d});
    CHECK(c1.lies_in(g));
    CHECK(k_intersect(c1, s).count == 2);
    CHECK(cross_or_fence(g, c1, s) == Fencing::Crosses);

    const Cycle c2({I::v3, I::v4, I::c, I::a, I::b});
    CHECK(c2.lies_in(g));
    CHECK(k_intersect(c2, s).count == 3);
    CHECK(cross_or_fence(g, c2, s) == Fencing::Fenced);

    CHECK(cross_or_fence(g, PathSegment({I::c, I::d}), s) == Fencing::Fenced);
    CHECK(cross_or_fence(g, Cycle({I::a, I::b, I::d}), s) == Fencing::Fenced);
    CHECK(s_equivalent(p2, PathSegment({I::v1, I::b, I::c, I::d, I::v2}), s));
    CHECK(s_equivalent(c2, Cycle({I::v1, I::b, I::c, I::v5, I::a}), s));
    CHECK_FALSE(s_equivalent(c1, c2, s));
  }

  TEST_CASE("crossing agrees with the separation oracle") {
    Rng rng(41);
    for (int trial = 0; trial < 300; ++trial) {
      const Graph h = oracle::random_biconnected(rng, rng.between(4, 9), 0.45);
      VertexSet x, t;
      std::vector<int> xv, tv;
      for (Vertex v = 0; v < h.order(); ++v) {
        if (rng.unit() < 0.3) {
          t.insert(v);
          tv.push_back(v);
        }
        if (rng.unit() < 0.5) {
          x.insert(v);
          xv.push_back(v);
        }
      }
      CHECK((cross_or_fence(h, x, t) == Fencing::Crosses) == oracle::separates(h, tv, xv));
    }
  }
}

TEST_SUITE("bag context") {
  TEST_CASE("preconditions") {
    const auto td4 = full_tree_decomposition(named::complete(5), 4);
    CHECK_THROWS_AS(BagContext(td4, 0), PreconditionError);
    const auto td = full_tree_decomposition(named::separation_example(), 3);
    CHECK_NOTHROW(BagContext(td, 0));
    const VertexSet bag = td.bag(0);
    CHECK_THROWS_AS(BagContext(td, 0, VertexSet{bag.front()}), PreconditionError);
    const VertexSet outside = VertexSet::all(9) - bag;
    const auto bv = bag.to_vector();
    CHECK_THROWS_AS(BagContext(td, 0, VertexSet{bv[0], bv[1], outside.front()}), PreconditionError);
    CHECK_THROWS_AS(BagContext(td, 0).inside_vertices(), PreconditionError);
  }

  TEST_CASE("vertex sides follow the branch union") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const auto gen = generate_k_tree(rng.between(5, 11), 3, rng);
      const auto& td = gen.decomposition;
      for (Node t = 0; t < td.node_count(); ++t)
        for (Vertex drop : td.bag(t)) {
          const BagContext ctx(td, t, td.bag(t) - VertexSet{drop});
          const auto want = oracle::inside_vertices(td, t, ctx.delta()->to_vector());
          for (Vertex v = 0; v < gen.graph.order(); ++v)
            CHECK((vertex_side(ctx, v) == Side::Inside) == want.contains(v));
        }
    }
  }
}

TEST_SUITE("cycle posture") {
  TEST_CASE("agrees with the part-splitting oracle on longest cycles of partial 3-trees") {
    Rng rng(99);
    long jumps = 0, outside = 0, inside = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const auto gen = generate_partial_k_tree(rng.between(6, 10), 3, 0.3, true, 1000, rng);
      const auto lcs = enumerate_longest_cycles(gen.graph);
      const auto& td = gen.decomposition;
      CAPTURE(write_graph6(gen.graph));
      for (Node t = 0; t < td.node_count(); ++t) {
        std::set<int> bag;
        for (Vertex v : td.bag(t)) bag.insert(v);
        for (Vertex drop : td.bag(t)) {
          const VertexSet delta = td.bag(t) - VertexSet{drop};
          const BagContext ctx(td, t, delta);
          const auto in = oracle::inside_vertices(td, t, delta.to_vector());
          for (const Cycle& c : lcs.cycles) {
            if ((c.vertices() & delta).size() < 2) {
              CHECK_THROWS_AS(cycle_posture(ctx, c), PreconditionError);
              continue;
            }
            const auto got = cycle_posture(ctx, c);
            CHECK(expected(got.tag) == oracle::posture(c.sequence(), delta.to_vector(), in, bag));
            CHECK(got.ell == (c.vertices() & delta).size());
            CHECK(got.at == (c.vertices() & delta));
            if (got.tag == CyclePosture::Tag::Jump) ++jumps;
            if (got.tag == CyclePosture::Tag::Outside) ++outside;
            if (got.tag == CyclePosture::Tag::Inside) ++inside;
          }
        }
      }
    }
    CHECK(jumps > 0);
    CHECK(outside > 0);
    CHECK(inside > 0);
  }

  TEST_CASE("a cycle within the bag is inside") {
    Rng rng(1);
    const auto gen = generate_k_tree(4, 3, rng);
    const auto& td = gen.decomposition;
    const VertexSet bag = td.bag(0);
    const auto v = bag.to_vector();
    const BagContext ctx(td, 0, VertexSet{v[0], v[1], v[2]});
    CHECK(cycle_posture(ctx, Cycle({v[0], v[1], v[3]})).tag == CyclePosture::Tag::Inside);
    CHECK(cycle_posture(ctx, Cycle({v[0], v[1], v[2], v[3]})).tag == CyclePosture::Tag::Inside);
  }

  TEST_CASE("path side") {
    Rng rng(8);
    const auto gen = generate_k_tree(6, 3, rng);
    const auto& td = gen.decomposition;
    const VertexSet bag = td.bag(0);
    const auto v = bag.to_vector();
    const BagContext ctx(td, 0, VertexSet{v[0], v[1], v[2]});
    CHECK(path_side(ctx, PathSegment({v[0], v[1]})) == Side::Inside);
    CHECK(path_side(ctx, PathSegment({v[0], v[3], v[1]})) == Side::Outside);
  }
}

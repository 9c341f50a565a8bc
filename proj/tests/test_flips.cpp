#include "doctest.h"
#include "fatmark/error.hpp"
#include "support.hpp"

using namespace fmtest;

namespace {

ErrorKind flip_error(const FatGraph& g, OrientedEdge e) {
  try {
    (void)flip(g, e);
  } catch (const Error& err) {
    return err.kind();
  }
  FAIL("flip unexpectedly succeeded");
  return ErrorKind::kInvalidArgument;
}

bool closes_exactly_up_to_iso(const FlipPath& p) {
  return p.is_closed() && canonicalize(p.end()).graph == canonicalize(p.start()).graph;
}

}  // namespace

TEST_CASE("flip labeling on the genus-1 graph") {
  const FatGraph g = g1();
  CHECK(flippable_slots(g) == std::vector<int>{1, 2, 3, 4});
  const FlipResult r = flip(g, P(3));
  // head(3+) = (3+, 4-, 0+), head(3-) = (3-, 1-, 2-).
  CHECK(r.context.a == M(4));
  CHECK(r.context.b == P(0));
  CHECK(r.context.c == M(1));
  CHECK(r.context.d == M(2));
  CHECK(r.context.e_new == P(3));
  CHECK(r.graph.vertex(3).inward == std::vector<OrientedEdge>{P(3), P(0), M(1)});
  CHECK(r.graph.vertex(2).inward == std::vector<OrientedEdge>{M(3), M(2), M(4)});
  CHECK_NOTHROW(validate(r.graph));
  CHECK(genus(r.graph) == 1);
  CHECK(boundary_number(r.graph) == 1);
  CHECK(flip(g, M(3)).graph == r.graph);
}

TEST_CASE("flip preconditions") {
  CHECK(flip_error(g1(), P(0)) == ErrorKind::kTailFlip);
  CHECK(flip_error(dumbbell(), P(1)) == ErrorKind::kLoopFlip);
  const FatGraph quad({0, 1, 2, 3, 4},
                      {{0, {M(0)}}, {1, {P(0), P(1), M(4)}}, {2, {M(1), P(2), M(2), P(3)}},
                       {3, {M(3), P(4)}}},
                      P(0));
  CHECK(flip_error(quad, P(1)) == ErrorKind::kNotTrivalent);
}

TEST_CASE("involutivity and commutativity") {
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    const FatGraph g = random_fatgraph(rng, 1 + static_cast<std::size_t>(t % 3), 10);
    for (int s : flippable_slots(g)) {
      const FlipPath p = involution_pair(g, P(s));
      CHECK(p.length() == 2);
      CHECK(closes_exactly_up_to_iso(p));
      CHECK(apply_path(g, {P(s), M(s)}).is_closed());
    }
    for (auto [s1, s2] : commuting_pairs(g)) {
      const FatGraph ab = flip(flip(g, P(s1)).graph, P(s2)).graph;
      const FatGraph ba = flip(flip(g, P(s2)).graph, P(s1)).graph;
      CHECK(canonicalize(ab).graph == canonicalize(ba).graph);
      const FlipPath loop = commuting_loop(g, P(s1), P(s2));
      CHECK(loop.length() == 4);
      CHECK(closes_exactly_up_to_iso(loop));
    }
  }
}

TEST_CASE("pentagon") {
  Rng rng(32);
  for (int t = 0; t < 40; ++t) {
    const FatGraph g = random_fatgraph(rng, 1 + static_cast<std::size_t>(t % 3), 10);
    const auto pairs = pentagon_pairs(g);
    CHECK_FALSE(pairs.empty());
    for (auto [f, h] : pairs) {
      CHECK(shared_endpoints(g, f, h) == 1);
      const FlipPath p = pentagon_path(g, P(f), M(h));
      CHECK(p.length() == 5);
      CHECK(closes_exactly_up_to_iso(p));
      const FlipPath listed = apply_path(g, {P(f), P(h), P(f), P(h), P(f)});
      CHECK(listed.end() == p.end());
      // No step re-flips the edge created by the step before it.
      for (std::size_t i = 1; i < p.length(); ++i) CHECK(p.steps()[i].e.slot() != p.steps()[i - 1].e_new.slot());
      const FlipPath back = p.reversed();
      CHECK(back.length() == 5);
      CHECK(find_isomorphism(back.end(), p.start()).has_value());
    }
  }
}

TEST_CASE("pentagon needs exactly one shared endpoint") {
  const FatGraph g = g1();
  // Edges 1 and 2 join the same two vertices.
  CHECK(shared_endpoints(g, 1, 2) == 2);
  CHECK_THROWS_AS(pentagon_path(g, P(1), P(2)), Error);
  try {
    (void)commuting_loop(g, P(1), P(3));
    FAIL("expected an edge-relation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kEdgeRelation);
  }
}

TEST_CASE("apply_path reports the failing step") {
  CHECK(apply_path(g1(), {}).length() == 0);
  CHECK(apply_path(g1(), {}).is_closed());
  try {
    (void)apply_path(g1(), {P(3), P(1), P(0)});
    FAIL("expected a path error");
  } catch (const PathError& e) {
    CHECK(e.step() == 2);
    CHECK(e.cause() == ErrorKind::kTailFlip);
  }
}

TEST_CASE("flips preserve counts and topology") {
  Rng rng(33);
  for (int t = 0; t < 30; ++t) {
    const std::size_t gen = 1 + static_cast<std::size_t>(t % 3);
    FatGraph g = random_fatgraph(rng, gen, 0);
    const std::size_t v = g.num_vertices(), e = g.num_edges();
    for (int i = 0; i < 50; ++i) {
      OrientedEdge x;
      REQUIRE(random_flip_edge(rng, g, x));
      g = flip(g, x).graph;
      CHECK(g.num_vertices() == v);
      CHECK(g.num_edges() == e);
      CHECK(oracle_boundary_number(g) == 1);
      CHECK(oracle_genus_twice(g) == 2 * static_cast<long>(gen));
    }
  }
}

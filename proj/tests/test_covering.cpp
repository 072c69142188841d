#include "doctest.h"

#include <random>

#include "covertower/covering.hpp"
#include "fixtures.hpp"

using namespace covertower;

namespace {

Cocycle random_cocycle(const H1Space& h, std::mt19937_64& rng) {
  F2Vector phi(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    if (rng() & 1) phi.set(i, true);
  return cocycle_from_functional(h, phi);
}

}  // namespace

TEST_CASE("double cover of the octagon: chi doubles, faces double") {
  auto s = fixtures::octagon();
  H1Space h(s);
  Cocycle psi = cocycle_from_functional(h, F2Vector::unit(4, 0));
  DoubleCover c = build_double_cover(s, psi);
  CHECK(euler_characteristic(c.total()) == -4);
  CHECK(genus(c.total()) == 3);
  CHECK(c.total().face_count() == 2);
  CHECK(c.total().vertex_count() == 2);
}

TEST_CASE("coboundary cocycle is rejected") {
  auto s = fixtures::octagon();
  Cocycle zero;
  zero.edge_bits = F2Vector(4);
  CHECK_THROWS_AS(build_double_cover(s, zero), Error);
}

TEST_CASE("connectivity iff nonzero class, on the honest graph oracle") {
  auto s = fixtures::torus_with_handle_face();
  H1Space h(s);
  std::mt19937_64 rng(23);
  int nonzero_seen = 0, zero_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Cocycle psi = random_cocycle(h, rng);
    bool conn = lifted_graph_connected(s, psi);
    bool cls = !cocycle_class(h, psi).is_zero();
    CHECK(conn == cls);
    (cls ? nonzero_seen : zero_seen)++;
  }
  CHECK(nonzero_seen > 0);
  CHECK(zero_seen > 0);
}

TEST_CASE("lift_walk telescoping and closure rule") {
  auto s = fixtures::octagon();
  H1Space h(s);
  Cocycle psi = cocycle_from_functional(h, F2Vector::unit(4, 0));
  DoubleCover c = build_double_cover(s, psi);
  // loop with zero voltage sum lifts closed
  auto [lb, endb] = c.lift_walk(EdgeWalk{{2}}, 0);
  CHECK(endb == 0);
  CHECK(lb.is_closed(c.total()));
  // loop with voltage 1 swaps sheets
  auto [la, enda] = c.lift_walk(EdgeWalk{{0}}, 0);
  CHECK(enda == 1);
  CHECK_FALSE(la.is_closed(c.total()));
  // projection is a left inverse of lifting; deck gives the other lift
  CHECK(c.project_walk(la).darts == std::vector<int>{0});
  auto [la1, e1] = c.lift_walk(EdgeWalk{{0}}, 1);
  CHECK(e1 == 0);
  for (std::size_t i = 0; i < la.darts.size(); ++i)
    CHECK(c.deck_dart(la.darts[i]) == la1.darts[i]);
}

TEST_CASE("lift classification truth table on random cocycles") {
  auto fix = fixtures::one_crossing_genus2();
  const CombinatorialSurface& t = fix.surface;
  const EdgeWalk& alpha = fix.alpha;
  CurveArcTriple triple = make_triple(t, fix.alpha, fix.beta, fix.tau);
  CHECK(triple.crossing_set.size() == 1);
  H1Space h(t);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Cocycle psi = random_cocycle(h, rng);
    LiftClassification cls = classify_lift(psi, triple);
    bool a0 = !psi.evaluate(triple.alpha), b0 = !psi.evaluate(triple.beta);
    if (a0 && b0) CHECK(cls.kind == LiftKind::Closed);
    else if (!a0 && !b0) CHECK(cls.kind == LiftKind::Nonclosed);
    else CHECK(cls.kind == LiftKind::PartiallyClosed);
    if (cocycle_class(h, psi).is_zero()) continue;
    DoubleCover c = build_double_cover(t, psi);
    TripleLift tl = lift_triple(c, triple);
    CHECK(tl.classification.kind == cls.kind);
    if (cls.kind == LiftKind::Closed) {
      REQUIRE(tl.lifted.has_value());
      CHECK(tl.lifted->alpha.length() == alpha.length());
      CHECK(c.project_walk(tl.lifted->alpha).darts == alpha.darts);
    }
  }
}

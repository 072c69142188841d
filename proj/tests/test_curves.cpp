#include "doctest.h"

#include "covertower/corpus.hpp"
#include "covertower/curves.hpp"
#include "covertower/homology.hpp"
#include "fixtures.hpp"

using namespace covertower;

TEST_CASE("crossings on the one-crossing pair") {
  auto fix = fixtures::one_crossing_genus2();
  CrossingSet cs = crossings(fix.surface, fix.alpha, fix.beta);
  CHECK(cs.size() == 1);
  CHECK(cs.points[0].vertex == 0);
  // symmetry
  CHECK(crossings(fix.surface, fix.beta, fix.alpha).size() == 1);
}

TEST_CASE("shared edge is rejected") {
  auto s = fixtures::octagon();
  CHECK_THROWS_AS(crossings(s, EdgeWalk{{0}}, EdgeWalk{{0}}), Error);
}

TEST_CASE("two-crossing corpus pair: counts, signs, parity") {
  CurveArcTriple t = corpus::g2_two_crossings_good();
  CHECK(t.crossing_set.size() == 2);
  H1Space h(t.surface);
  CHECK(h.class_of(t.alpha) == h.class_of(t.beta));
  // [alpha]=[beta] forces even crossing parity
  CHECK(t.crossing_set.size() % 2 == 0);
  // pairing parity matches the crossing count for a transverse minimal pair
  CHECK(h.pairing(h.class_of(t.alpha), h.class_of(t.beta)) == false);
  CHECK(is_minimal_position(t.surface, t.alpha, t.beta).minimal);
}

TEST_CASE("one-crossing pair: pairing parity is odd") {
  CurveArcTriple t = corpus::g2_one_crossing();
  H1Space h(t.surface);
  CHECK(h.pairing(h.class_of(t.alpha), h.class_of(t.beta)) == true);
  CHECK(h.class_of(t.alpha) != h.class_of(t.beta));
}

TEST_CASE("disjoint pair is minimal (no crossings, no bigons)") {
  CurveArcTriple t = corpus::g2_disjoint_diff();
  CHECK(t.crossing_set.size() == 0);
  CHECK(is_minimal_position(t.surface, t.alpha, t.beta).minimal);
}

TEST_CASE("wiggle: bigon witness, reduction to minimal") {
  CurveArcTriple t = corpus::g2_wiggle();
  CHECK(t.crossing_set.size() == 4);
  auto mr = is_minimal_position(t.surface, t.alpha, t.beta);
  CHECK_FALSE(mr.minimal);
  REQUIRE(mr.witness.has_value());
  CHECK(mr.witness->corners == 2);
  CHECK(mr.witness->is_disc());

  ReduceResult r = reduce_to_minimal(t.surface, t.alpha, t.beta);
  CHECK(r.crossing_set.size() == 2);
  CHECK(r.moves == 1);
  CHECK(is_minimal_position(r.surface, r.alpha, r.beta).minimal);
  // genus preserved by the move
  CHECK(genus(r.surface) == genus(t.surface));
  // crossing parity still matches the intersection pairing
  H1Space h(r.surface);
  CHECK(h.pairing(h.class_of(r.alpha), h.class_of(r.beta)) == false);

  // fixpoint: reducing a minimal pair changes nothing
  ReduceResult r2 = reduce_to_minimal(r.surface, r.alpha, r.beta);
  CHECK(r2.moves == 0);
  CHECK(r2.crossing_set.size() == 2);
}

TEST_CASE("reduce on a disjoint pair is a fixpoint") {
  CurveArcTriple t = corpus::g2_disjoint_sep();
  ReduceResult r = reduce_to_minimal(t.surface, t.alpha, t.beta);
  CHECK(r.moves == 0);
  CHECK(r.crossing_set.size() == 0);
}

TEST_CASE("triple validation rejects tangencies and bad taus") {
  auto fix = fixtures::one_crossing_genus2();
  CHECK_THROWS_AS(make_triple(fix.surface, fix.alpha, fix.beta, EdgeWalk{{0}}), Error);
}

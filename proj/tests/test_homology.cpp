#include "doctest.h"

#include <random>

#include "covertower/homology.hpp"
#include "fixtures.hpp"

using namespace covertower;

TEST_CASE("h1 dimensions") {
  CHECK(H1Space(fixtures::octagon()).dim() == 4);
  CHECK(H1Space(fixtures::torus()).dim() == 2);
  CHECK(H1Space(fixtures::torus_with_handle_face()).dim() == 4);
}

TEST_CASE("class_of basics on the octagon") {
  auto s = fixtures::octagon();
  H1Space h(s);
  // face boundary vanishes
  EdgeWalk face{s.face(0)};
  CHECK(h.class_of(face).is_zero());
  // the a generator is a (unit) basis vector; a.a dies over F2
  EdgeWalk a{{0}};
  CHECK(h.class_of(a) == F2Vector::unit(4, 0));
  EdgeWalk aa{{0, 0}};
  CHECK(h.class_of(aa).is_zero());
}

TEST_CASE("class_of rejects open walks") {
  auto s = fixtures::octagon();
  auto r = subdivide_edge(s, 0);
  H1Space h(r.surface);
  EdgeWalk open{{0}};  // now ends at the midpoint
  CHECK_THROWS_AS(h.class_of(open), Error);
}

TEST_CASE("class_of is a homomorphism") {
  auto s = fixtures::octagon();
  H1Space h(s);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    EdgeWalk w1, w2;
    for (int i = 0; i < 6; ++i) {
      w1.darts.push_back(int(rng() % 8));
      w2.darts.push_back(int(rng() % 8));
    }
    CHECK((h.class_of(w1) ^ h.class_of(w2)) == h.class_of(concatenate(s, w1, w2)));
  }
}

TEST_CASE("pairing on the octagon: handle pairs") {
  auto s = fixtures::octagon();
  H1Space h(s);
  auto cls = [&](int dart) { return h.class_of(EdgeWalk{{dart}}); };
  F2Vector a = cls(0), b = cls(2), c = cls(4), d = cls(6);
  CHECK(h.pairing(a, b));
  CHECK(h.pairing(c, d));
  CHECK_FALSE(h.pairing(a, c));
  CHECK_FALSE(h.pairing(a, d));
  CHECK_FALSE(h.pairing(b, c));
  CHECK_FALSE(h.pairing(a, a));
  CHECK(h.pairing(b, a));  // symmetric over F2
}

TEST_CASE("pairing is nondegenerate and invariant under face relations") {
  auto s = fixtures::torus_with_handle_face();
  H1Space h(s);
  // nondegeneracy: the Gram matrix has full rank
  std::vector<F2Vector> rows;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    F2Vector row(h.dim());
    for (std::size_t j = 0; j < h.dim(); ++j)
      if (h.pairing(F2Vector::unit(h.dim(), i), F2Vector::unit(h.dim(), j))) row.set(j, true);
    rows.push_back(row);
  }
  CHECK(f2_rank(rows, h.dim()) == h.dim());
  // face boundaries pair to zero with everything (well-definedness)
  for (int f = 0; f < s.face_count(); ++f) {
    EdgeWalk w{s.face(f)};
    for (std::size_t i = 0; i < h.dim(); ++i)
      CHECK_FALSE(pairing_of_walks(s, w, h.basis_walk(i)));
  }
}

TEST_CASE("cocycles: construction, face condition, two evaluation routes") {
  auto s = fixtures::octagon();
  H1Space h(s);
  F2Vector phi = F2Vector::unit(4, 0);  // dual of [a]
  Cocycle psi = cocycle_from_functional(h, phi);
  CHECK(psi.value_on_edge(0));
  CHECK_FALSE(psi.value_on_edge(1));
  CHECK(cocycle_face_condition(s, psi));
  CHECK(cocycle_class(h, psi) == phi);
  // evaluation route agreement on random closed walks
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    EdgeWalk w;
    for (int i = 0; i < 8; ++i) w.darts.push_back(int(rng() % 8));
    CHECK(psi.evaluate(w) == phi.dot(h.class_of(w)));
  }
  // phi = 0 gives a coboundary class
  Cocycle zero = cocycle_from_functional(h, F2Vector(4));
  CHECK(cocycle_class(h, zero).is_zero());
}

TEST_CASE("quotient space kills exactly the span") {
  auto s = fixtures::octagon();
  H1Space h(s);
  F2Vector beta = h.class_of(EdgeWalk{{2}});
  QuotientSpace q(h, {beta});
  CHECK(q.dim() == 3);
  CHECK(q.project(beta).is_zero());
  CHECK_FALSE(q.project(h.class_of(EdgeWalk{{0}})).is_zero());
  // kernel is exactly the span: project(x)=0 => x in {0, beta}
  for (int bits = 0; bits < 16; ++bits) {
    F2Vector x(4);
    for (int i = 0; i < 4; ++i)
      if ((bits >> i) & 1) x.set(std::size_t(i), true);
    if (q.project(x).is_zero()) CHECK((x.is_zero() || x == beta));
  }
  CHECK_THROWS_AS(QuotientSpace(h, {F2Vector(4)}), Error);
  // lifted functionals factor through the projection
  F2Vector phiX = F2Vector::unit(3, 1);
  F2Vector lifted = q.lift_functional(phiX);
  CHECK_FALSE(lifted.dot(beta));
}

TEST_CASE("functional enumeration: counts, constraints, cap") {
  CHECK(FunctionalEnumerator(2, false).collect().size() == 4);
  CHECK(FunctionalEnumerator(2, true).collect().size() == 3);
  // f(v)=1 for fixed nonzero v: affine subspace of half size
  FunctionalConstraint c{F2Vector::from_bits({1, 0, 1}), true};
  CHECK(FunctionalEnumerator(3, false, {c}).collect().size() == 4);
  // inconsistent constraints give the empty stream
  FunctionalConstraint bad{F2Vector(3), true};
  CHECK(FunctionalEnumerator(3, false, {bad}).collect().empty());
  CHECK_THROWS_AS(FunctionalEnumerator(30, false), Error);
  // deterministic order
  auto a = FunctionalEnumerator(4, true).collect();
  auto b = FunctionalEnumerator(4, true).collect();
  CHECK(a == b);
}

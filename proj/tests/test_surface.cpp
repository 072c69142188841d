#include "doctest.h"

#include "covertower/surface.hpp"
#include "fixtures.hpp"

using namespace covertower;

TEST_CASE("octagon is the closed genus-2 surface") {
  auto s = fixtures::octagon();
  CHECK(s.vertex_count() == 1);
  CHECK(s.edge_count() == 4);
  CHECK(s.face_count() == 1);
  CHECK(euler_characteristic(s) == -2);
  CHECK(genus(s) == 2);
  CHECK(s.closed());
  CHECK(s.connected());
}

TEST_CASE("torus square and tower-driver genus gate") {
  auto s = fixtures::torus();
  CHECK(euler_characteristic(s) == 0);
  CHECK(genus(s) == 1);
}

TEST_CASE("face genus normalization attaches handles") {
  auto s = fixtures::torus_with_handle_face();
  CHECK(s.vertex_count() == 1);
  CHECK(s.edge_count() == 4);
  CHECK(s.face_count() == 1);
  CHECK(euler_characteristic(s) == -2);
  CHECK(genus(s) == 2);
  // boundary word of the face is (old walk) . [a1,b1]
  const auto& f = s.face(0);
  CHECK(f.size() == 8);
}

TEST_CASE("octagon with one face unfilled") {
  auto s = fixtures::octagon_boundary();
  CHECK(euler_characteristic(s) == -3);
  CHECK(s.boundary_count() == 1);
  CHECK(genus(s) == 2);
}

TEST_CASE("face mismatch is rejected") {
  SurfaceSpec spec;
  spec.rotation = {{0, 3, 1, 2}};
  spec.expected_faces = {{0, 1, 2, 3}};
  CHECK_THROWS_AS(build_surface(spec), Error);
}

TEST_CASE("disconnected complex is rejected") {
  SurfaceSpec spec;
  spec.rotation = {{0, 1}, {2, 3}};
  CHECK_THROWS_AS(build_surface(spec), Error);
}

TEST_CASE("walk helpers") {
  auto s = fixtures::octagon();
  EdgeWalk a{{0}};
  CHECK(a.is_closed(s));
  CHECK(is_simple_closed(s, a));
  EdgeWalk back{{0, 1}};
  CHECK(reduce_walk(back, false).empty());
  EdgeWalk ab{{0, 2}};
  CHECK(is_simple_closed(s, ab) == false);  // revisits the vertex
  EdgeWalk rev = ab.reversed();
  CHECK(rev.darts == std::vector<int>{3, 1});
}

TEST_CASE("concatenate reduces cyclically") {
  auto s = fixtures::octagon();
  // mu = a b, eta = b^-1 a^-1: cancels across the joint and the wrap
  EdgeWalk mu{{0, 2}}, eta{{3, 1}};
  EdgeWalk joined = concatenate(s, mu, eta);
  CHECK(joined.darts == std::vector<int>{});
  // mu . c stays cyclically reduced
  EdgeWalk c{{4}};
  CHECK(concatenate(s, EdgeWalk{{0}}, c).length() == 2);
}

TEST_CASE("subdivide_edge preserves the surface") {
  auto s = fixtures::octagon();
  auto r = subdivide_edge(s, 0);
  CHECK(r.surface.vertex_count() == 2);
  CHECK(r.surface.edge_count() == 5);
  CHECK(euler_characteristic(r.surface) == -2);
  CHECK(genus(r.surface) == 2);
  EdgeWalk a{{0}};
  EdgeWalk a2 = r.map.apply(a);
  CHECK(a2.length() == 2);
  CHECK(a2.is_closed(r.surface));
  CHECK(is_simple_closed(r.surface, a2));
}

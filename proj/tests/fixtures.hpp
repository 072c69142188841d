#pragma once

#include "covertower/surface.hpp"

namespace covertower::fixtures {

// one-vertex genus-2 octagon a b a^-1 b^-1 c d c^-1 d^-1
// darts: a=0/1, b=2/3, c=4/5, d=6/7
inline CombinatorialSurface octagon() {
  SurfaceSpec spec;
  spec.rotation = {{0, 3, 1, 2, 4, 7, 5, 6}};
  spec.expected_faces = {{0, 2, 1, 3, 4, 6, 5, 7}};
  return build_surface(spec);
}

// torus square a b a^-1 b^-1; darts a=0/1, b=2/3
inline CombinatorialSurface torus() {
  SurfaceSpec spec;
  spec.rotation = {{0, 3, 1, 2}};
  return build_surface(spec);
}

// genus-2 from the torus square with face genus 1
inline CombinatorialSurface torus_with_handle_face() {
  SurfaceSpec spec;
  spec.rotation = {{0, 3, 1, 2}};
  spec.face_genus = {{0, 1}};
  return build_surface(spec);
}

// octagon with the single face unfilled: genus-2 spine, chi = -3
inline CombinatorialSurface octagon_boundary() {
  SurfaceSpec spec;
  spec.rotation = {{0, 3, 1, 2, 4, 7, 5, 6}};
  spec.boundary_face_darts = {0};
  return build_surface(spec);
}

// two curves crossing once on genus 2: loops A = A1.A2 and B = B1.B2 meet
// transversally at x; midpoints mA, mB host the basepoints and the handle.
// vertices: x=0, mA=1, mB=2; edges A1=0, A2=1, B1=2, B2=3
struct OneCrossing {
  CombinatorialSurface surface;
  EdgeWalk alpha;  // based at mA
  EdgeWalk beta;   // based at mB
  EdgeWalk tau;    // mA -> mB
};

inline OneCrossing one_crossing_genus2() {
  SurfaceSpec spec;
  spec.rotation = {{0, 4, 3, 7}, {2, 1}, {6, 5}};
  spec.face_genus = {{2, 1}};
  OneCrossing f;
  f.surface = build_surface(spec);
  f.alpha = EdgeWalk{{2, 0}};
  f.beta = EdgeWalk{{6, 4}};
  f.tau = EdgeWalk{{1, 4}};
  return f;
}

}  // namespace covertower::fixtures

#pragma once

#include <optional>

#include "covertower/surface.hpp"

namespace covertower {

struct Crossing {
  int vertex;
  int alpha_pos;  // alpha.vertex_at(alpha_pos) == vertex
  int beta_pos;
  bool sign;  // local crossing sign: true when beta leaves counterclockwise-first
};

struct CrossingSet {
  std::vector<Crossing> points;  // ordered along alpha
  std::size_t size() const { return points.size(); }
  bool contains_vertex(int v) const;
};

/// One transverse crossing per shared vertex where the two strands
/// interleave in the rotation. Shared edges are rejected.
CrossingSet crossings(const CombinatorialSurface& s, const EdgeWalk& alpha, const EdgeWalk& beta);

/// Based curve pair joined by a connecting path, with its crossing set.
struct CurveArcTriple {
  CombinatorialSurface surface;
  EdgeWalk alpha;
  EdgeWalk beta;
  EdgeWalk tau;  // path v -> w; may be empty when v == w
  CrossingSet crossing_set;

  int v() const { return alpha.origin(surface); }
  int w() const { return beta.origin(surface); }
};

/// Validates simplicity, edge-disjointness and degree-4 interleaved
/// transversality at every shared vertex, then computes crossings.
CurveArcTriple make_triple(CombinatorialSurface s, EdgeWalk alpha, EdgeWalk beta, EdgeWalk tau);

/// Complementary regions of the alpha-union-beta overlay: components of the
/// surface cut along both curves.
struct OverlayRegion {
  std::vector<int> faces;  // faces of s inside the region
  int euler = 0;
  int corners = 0;                // boundary passages through crossings
  int boundary_components = 0;
  bool is_disc() const { return euler == 1; }
};

struct OverlayAnalysis {
  std::vector<OverlayRegion> regions;
  std::vector<int> region_of_face;
  std::optional<int> bigon;      // disc region with exactly two corners
  std::optional<int> null_disc;  // disc region with no corners (curve bounds a disc)
  bool minimal() const { return !bigon && !null_disc; }
};

OverlayAnalysis analyze_overlay(const CombinatorialSurface& s, const EdgeWalk& alpha,
                                const EdgeWalk& beta);

struct MinimalityResult {
  bool minimal = false;
  std::optional<OverlayRegion> witness;
};

/// Bigon criterion: minimal iff the overlay has no bigon region and no
/// nullhomotopic zero-corner disc region.
MinimalityResult is_minimal_position(const CombinatorialSurface& s, const EdgeWalk& alpha,
                                     const EdgeWalk& beta);

/// Result of pushing alpha off all bigons. The rewritten curve lives on a
/// refinement of the input surface (parallel tracks are inserted beside the
/// crossed beta-arcs); beta transports verbatim.
struct ReduceResult {
  CombinatorialSurface surface;
  EdgeWalk alpha;
  EdgeWalk beta;
  CrossingSet crossing_set;
  int moves = 0;
};

ReduceResult reduce_to_minimal(const CombinatorialSurface& s, const EdgeWalk& alpha,
                               const EdgeWalk& beta);

}  // namespace covertower

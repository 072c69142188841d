#pragma once

#include "covertower/surface.hpp"

namespace covertower {

/// One connected component of a surface cut along a set of edges. Cut edges
/// are doubled (one copy per side) and cut vertices split into rotation
/// sectors; the rim becomes marked boundary faces.
struct CutPiece {
  CombinatorialSurface surface;
  std::vector<int> vertex_to_old;  // piece vertex -> old vertex
  std::vector<int> dart_to_old;    // piece dart -> old dart (side copies -> their dart)
  std::vector<char> vertex_on_cut;  // piece vertex came from a sector at a cut vertex

  /// Maps a walk of this piece to the uncut surface.
  EdgeWalk to_old(const EdgeWalk& w) const;
};

struct EdgeCut {
  std::vector<CutPiece> pieces;
  std::vector<int> old_face_piece;  // old face -> piece index
  std::vector<int> old_face_local;  // old face -> face id within its piece
};

/// Cuts along every edge with cut_edges[e] != 0. The cut set must be a
/// union of closed curve supports: every vertex meets an even number of
/// cut darts (>= 2 when any).
EdgeCut cut_along_edges(const CombinatorialSurface& s, const std::vector<char>& cut_edges);

/// Cut along an embedded separating cycle: exactly two sides, each with one
/// boundary face. side_s is the piece not containing `beta_marker_edge`
/// when that edge is provided (>= 0), otherwise pieces come in
/// component-discovery order.
struct CutResult {
  CutPiece side_s;       // the side "away" from beta in arc pairings
  CutPiece side_sprime;  // the side containing beta
};
CutResult cut_along(const CombinatorialSurface& s, const EdgeWalk& cycle,
                    int beta_marker_edge = -1);

/// Double of a bordered surface across its boundary. The original keeps its
/// dart ids (the embedding is the identity on walks); mirrored darts map
/// back through `retract_dart`.
struct DoubleResult {
  CombinatorialSurface surface;  // closed
  std::vector<int> retract_dart;  // new dart -> base dart
  bool vacuous_warning = false;   // 2g + b < 3

  EdgeWalk embed(const EdgeWalk& w) const { return w; }
  EdgeWalk retract(const EdgeWalk& w) const;
};
DoubleResult double_surface(const CombinatorialSurface& s);

}  // namespace covertower

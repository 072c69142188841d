#pragma once

#include "covertower/curves.hpp"
#include "covertower/homology.hpp"
#include "covertower/surface.hpp"

namespace covertower {

/// Regular degree-2 cover defined by an F2 cocycle: sheets transport by the
/// cumulative voltage. Lifted ids: vertex (v,s) = v + s*V; edge e with
/// forward-origin sheet t becomes edge 2e+t, so dart (d,s) is
/// 4*edge(d) + 2*(sheet of the forward dart) + parity(d).
class DoubleCover {
public:
  DoubleCover(const CombinatorialSurface& base, Cocycle psi);

  const CombinatorialSurface& total() const { return total_; }
  const Cocycle& cocycle() const { return psi_; }
  int base_vertex_count() const { return base_vertices_; }
  int base_dart_count() const { return base_darts_; }

  int lift_vertex(int v, int sheet) const { return v + sheet * base_vertices_; }
  int lift_dart(int d, int sheet) const;
  int project_dart(int lifted) const;
  int project_vertex(int lifted) const { return lifted % base_vertices_; }
  int sheet_of_vertex(int lifted) const { return lifted / base_vertices_; }
  /// Sheet-swap deck transformation (a fixed-point-free involution).
  int deck_dart(int lifted) const { return lifted ^ 2; }

  /// Lift starting on `start_sheet`; returns the lifted walk and end sheet.
  std::pair<EdgeWalk, int> lift_walk(const EdgeWalk& w, int start_sheet) const;
  EdgeWalk project_walk(const EdgeWalk& w) const;

private:
  CombinatorialSurface total_;
  Cocycle psi_;
  int base_vertices_;
  int base_darts_;
};

/// Connectivity of the lifted 1-skeleton, computed directly on the graph
/// (no cocycle-class shortcut) so it can serve as an independent oracle.
bool lifted_graph_connected(const CombinatorialSurface& base, const Cocycle& psi);

/// Rejects coboundaries (disconnected covers), checks the face condition,
/// and validates the deck involution and Euler doubling on the result.
DoubleCover build_double_cover(const CombinatorialSurface& base, const Cocycle& psi);

enum class LiftKind { Closed, PartiallyClosed, Nonclosed };

struct LiftClassification {
  LiftKind kind;
  bool alpha_closed;
  bool beta_closed;
};

const char* to_string(LiftKind k);

/// Classification table on (psi[alpha], psi[beta]); when Closed, also the
/// based lifted triple with crossings against the chosen beta component.
struct TripleLift {
  LiftClassification classification;
  std::optional<CurveArcTriple> lifted;
};

LiftClassification classify_lift(const Cocycle& psi, const CurveArcTriple& t);
TripleLift lift_triple(const DoubleCover& c, const CurveArcTriple& t);

/// Tower of degree-2 covers, each level built over the previous total space.
struct TowerLevel {
  DoubleCover cover;
  LiftClassification classification;
  std::optional<CurveArcTriple> triple;  // present while lifts stay closed
};

struct Tower {
  CurveArcTriple base;
  std::vector<TowerLevel> levels;

  int k() const { return int(levels.size()); }
  const CurveArcTriple& triple_at(int level) const;  // level 0 = base
  const CombinatorialSurface& surface_at(int level) const;
};

/// Permutation action of loops at the base point on the 2^k fiber leaves.
/// Fiber labels encode per-level sheets: bit i-1 is the sheet at level i.
struct Monodromy {
  int k = 0;
  std::vector<EdgeWalk> generators;           // loops at v on the base surface
  std::vector<std::vector<int>> permutations;  // one per generator

  std::size_t fiber_size() const { return std::size_t(1) << k; }
  bool transitive() const;
};

/// Transport of a based loop through every level of the tower.
int tower_transport(const Tower& tw, const EdgeWalk& loop, int fiber_point);
std::vector<int> tower_permutation(const Tower& tw, const EdgeWalk& loop);

/// Generators default to the fundamental cycles of non-tree edges of the
/// base surface, rooted at the alpha basepoint.
Monodromy monodromy(const Tower& tw);
Monodromy monodromy(const Tower& tw, const std::vector<EdgeWalk>& generators);

}  // namespace covertower

#pragma once

#include <optional>

#include "covertower/f2.hpp"
#include "covertower/surface.hpp"

namespace covertower {

/// H1(S; F2) presented on the cycle space of a breadth-first spanning tree:
/// coordinates are non-tree edges, face boundaries give the relations.
/// Basis choice is deterministic given the surface labeling and root.
class H1Space {
public:
  explicit H1Space(const CombinatorialSurface& s, int root = 0);

  const CombinatorialSurface& surface() const { return *surface_; }
  int root() const { return root_; }

  std::size_t cycle_dim() const { return nontree_edges_.size(); }
  std::size_t dim() const { return coord_positions_.size(); }

  std::size_t nontree_count() const { return nontree_edges_.size(); }
  int nontree_edge(std::size_t i) const { return nontree_edges_[i]; }

  /// Non-tree-edge indicator of a closed walk (its cycle-space coordinates).
  F2Vector chain_of(const EdgeWalk& w) const;
  /// Homology coordinates of a closed walk. Throws on open walks.
  F2Vector class_of(const EdgeWalk& w) const;
  F2Vector class_of_cycle_vector(F2Vector cycle) const;

  /// Tree path root -> v (empty for the root itself).
  EdgeWalk tree_path_from_root(int v) const;
  /// Based loop: tree path to the tail of non-tree edge i, the edge, tree
  /// path back. These loops generate the fundamental group at the root.
  EdgeWalk fundamental_cycle(std::size_t nontree_index) const;
  /// Representative walk of the i-th homology basis vector.
  EdgeWalk basis_walk(std::size_t i) const;

  /// Symplectic mod-2 intersection pairing, computed once from crossing
  /// counts of pushed-off basis representatives.
  bool pairing(const F2Vector& x, const F2Vector& y) const;

private:
  const CombinatorialSurface* surface_;
  int root_;
  std::vector<int> parent_dart_;   // per vertex: dart from parent to vertex; -1 at root
  std::vector<char> edge_in_tree_;
  std::vector<int> nontree_edges_;
  std::vector<int> nontree_index_;          // edge -> index or -1
  F2Matrix relations_;                      // face relations, echelon form
  std::vector<int> coord_positions_;        // non-pivot cycle coordinates
  mutable std::vector<F2Vector> gram_;      // lazy pairing matrix
  void build_gram() const;
};

/// Mod-2 intersection parity of two closed walks: the left push-off of z is
/// counted against the corner passages of w. Agrees with transverse crossing
/// parity and descends to homology.
bool pairing_of_walks(const CombinatorialSurface& s, const EdgeWalk& z, const EdgeWalk& w);

/// F2 edge assignment with zero sum around every filled face.
struct Cocycle {
  F2Vector edge_bits;

  bool value_on_edge(int e) const { return edge_bits.get(std::size_t(e)); }
  bool value_on_dart(int d) const { return edge_bits.get(std::size_t(edge_of(d))); }
  bool evaluate(const EdgeWalk& w) const;
};

bool cocycle_face_condition(const CombinatorialSurface& s, const Cocycle& psi);
/// Values of the induced map H1 -> F2 on the basis of h (dual coordinates);
/// zero iff psi is a coboundary.
F2Vector cocycle_class(const H1Space& h, const Cocycle& psi);

/// Edge assignment inducing the functional phi (given in dual coordinates on
/// the basis of h): non-tree edges carry phi of their fundamental cycles.
Cocycle cocycle_from_functional(const H1Space& h, const F2Vector& phi);

/// X = H1 / span(killed). Verifies the killed vectors are independent and
/// nonzero before quotienting.
class QuotientSpace {
public:
  QuotientSpace(const H1Space& h, const std::vector<F2Vector>& killed);

  const H1Space& ambient() const { return *h_; }
  std::size_t dim() const { return free_positions_.size(); }
  F2Vector project(const F2Vector& h1class) const;
  /// phi on X pulled back to a functional on H1 (dual coordinates).
  F2Vector lift_functional(const F2Vector& phi_on_x) const;

private:
  const H1Space* h_;
  F2Matrix killed_;
  std::vector<int> free_positions_;
};

struct FunctionalConstraint {
  F2Vector vec;
  bool value = false;
};

/// Streams the linear maps F2^dim -> F2 (as dual vectors) satisfying the
/// given affine constraints, in a fixed deterministic order.
class FunctionalEnumerator {
public:
  FunctionalEnumerator(std::size_t dim, bool nonzero_only,
                       std::vector<FunctionalConstraint> constraints = {},
                       std::size_t cap_dim = kDefaultCap);

  std::optional<F2Vector> next();
  std::vector<F2Vector> collect();

  static constexpr std::size_t kDefaultCap = 24;

private:
  std::size_t dim_;
  bool nonzero_only_;
  bool empty_ = false;
  F2Vector particular_;
  std::vector<F2Vector> homogeneous_;
  uint64_t counter_ = 0;
};

}  // namespace covertower

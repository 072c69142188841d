#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace covertower {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Darts are integers 0..2E-1; edge e owns darts 2e and 2e+1, and the
/// involution swaps them. A dart points away from the vertex whose
/// rotation lists it.
inline int twin(int dart) { return dart ^ 1; }
inline int edge_of(int dart) { return dart >> 1; }
inline int forward_dart(int edge) { return 2 * edge; }

/// Input description of a surface: vertex rotations (counterclockwise
/// dart order), optional boundary-face marks and per-face genus, each
/// face identified by one dart on its traced walk. Faces with genus are
/// normalized away during construction by attaching handle loops, so a
/// built surface always has disc faces plus marked boundary faces.
struct SurfaceSpec {
  std::vector<std::vector<int>> rotation;
  std::vector<int> boundary_face_darts;
  std::vector<std::pair<int, int>> face_genus;  // (dart on face, genus >= 1)
  /// When nonempty, the traced faces must match these walks (up to cyclic
  /// rotation, as a partition of all darts).
  std::vector<std::vector<int>> expected_faces;
};

class CombinatorialSurface {
public:
  int vertex_count() const { return int(rotation_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int dart_count() const { return int(dart_vertex_.size()); }
  int face_count() const { return int(faces_.size()); }
  int filled_face_count() const;
  int boundary_count() const;
  bool closed() const { return boundary_count() == 0; }

  const std::vector<int>& rotation(int v) const { return rotation_[std::size_t(v)]; }
  int dart_origin(int d) const { return dart_vertex_[std::size_t(d)]; }
  int dart_target(int d) const { return dart_vertex_[std::size_t(twin(d))]; }
  int degree(int v) const { return int(rotation_[std::size_t(v)].size()); }

  /// Next / previous dart counterclockwise around the origin of d.
  int rotation_next(int d) const;
  int rotation_prev(int d) const;
  /// Successor along the face walk containing d.
  int face_next(int d) const { return rotation_next(twin(d)); }

  const std::vector<std::vector<int>>& faces() const { return faces_; }
  const std::vector<int>& face(int f) const { return faces_[std::size_t(f)]; }
  int face_of(int dart) const { return dart_face_[std::size_t(dart)]; }
  bool face_is_boundary(int f) const { return boundary_face_[std::size_t(f)] != 0; }

  bool connected() const { return connected_; }

  friend CombinatorialSurface build_surface(const SurfaceSpec& spec);

private:
  std::vector<std::vector<int>> rotation_;
  std::vector<int> dart_vertex_;
  std::vector<int> dart_slot_;  // index of dart within its rotation
  std::vector<std::vector<int>> faces_;
  std::vector<int> dart_face_;
  std::vector<char> boundary_face_;
  bool connected_ = false;

  void retrace();  // fills faces_, dart_face_, dart_vertex_, dart_slot_, connected_
};

/// Validates the spec, traces faces from the rotation system, checks them
/// against expected faces when given, normalizes face genus by attaching
/// handle loops, and marks boundary faces.
CombinatorialSurface build_surface(const SurfaceSpec& spec);

int euler_characteristic(const CombinatorialSurface& s);
int genus(const CombinatorialSurface& s);

/// A walk in the 1-skeleton: consecutive darts share a vertex.
struct EdgeWalk {
  std::vector<int> darts;

  bool empty() const { return darts.empty(); }
  int length() const { return int(darts.size()); }
  int origin(const CombinatorialSurface& s) const { return s.dart_origin(darts.front()); }
  int target(const CombinatorialSurface& s) const { return s.dart_target(darts.back()); }
  bool is_closed(const CombinatorialSurface& s) const {
    return !empty() && origin(s) == target(s);
  }
  /// Vertex visited before traversing darts[i].
  int vertex_at(const CombinatorialSurface& s, int i) const {
    return s.dart_origin(darts[std::size_t(i)]);
  }

  EdgeWalk reversed() const;
};

/// Throws when consecutive darts fail to share a vertex.
void check_walk(const CombinatorialSurface& s, const EdgeWalk& w, const std::string& name);

/// A simple closed walk: closed, cyclically reduced, visiting each vertex
/// at most once.
bool is_simple_closed(const CombinatorialSurface& s, const EdgeWalk& w);

/// Free reduction (cancel dart followed by its twin), applied cyclically
/// for closed walks.
EdgeWalk reduce_walk(const EdgeWalk& w, bool cyclic);

/// Walk concatenation with cyclic reduction of the closed result.
/// Requires end(mu) = start(eta) and end(eta) = start(mu).
EdgeWalk concatenate(const CombinatorialSurface& s, const EdgeWalk& mu, const EdgeWalk& eta);

/// Dart-level transport of walks across a surgery that refines a surface.
struct WalkMap {
  std::vector<std::vector<int>> dart_images;
  EdgeWalk apply(const EdgeWalk& w) const;
};

/// Splits an edge with a new degree-2 vertex. The two darts of the old
/// edge map to two-dart paths through the new vertex.
struct SubdivideResult {
  CombinatorialSurface surface;
  WalkMap map;
  int new_vertex;
};
SubdivideResult subdivide_edge(const CombinatorialSurface& s, int edge);

}  // namespace covertower

#include "covertower/surgery.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace covertower {

EdgeWalk CutPiece::to_old(const EdgeWalk& w) const {
  EdgeWalk out;
  out.darts.reserve(w.darts.size());
  for (int d : w.darts) out.darts.push_back(dart_to_old[std::size_t(d)]);
  return out;
}

namespace {

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(std::size_t(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[std::size_t(x)] != x) {
      parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
      x = parent[std::size_t(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[std::size_t(find(a))] = find(b); }
};

}  // namespace

EdgeCut cut_along_edges(const CombinatorialSurface& s, const std::vector<char>& cut_edges) {
  if (int(cut_edges.size()) != s.edge_count()) throw Error("cut: edge flag size mismatch");
  const int n_old_darts = s.dart_count();
  auto is_cut = [&](int dart) { return cut_edges[std::size_t(edge_of(dart))] != 0; };

  // Sectors: at vertices met by cut darts, maximal rotation runs between
  // consecutive cut darts; elsewhere the whole vertex.
  // sector id per (vertex, gap). A gap is labeled by the cut dart it follows.
  int n_sectors = 0;
  std::vector<int> whole_vertex_sector(std::size_t(s.vertex_count()), -1);
  std::vector<int> sector_after_dart(std::size_t(n_old_darts), -1);  // cut dart -> sector id
  std::vector<int> sector_old_vertex;
  std::vector<char> sector_on_cut;
  for (int v = 0; v < s.vertex_count(); ++v) {
    const auto& rot = s.rotation(v);
    std::vector<int> cuts;
    for (int d : rot)
      if (is_cut(d)) cuts.push_back(d);
    if (cuts.empty()) {
      whole_vertex_sector[std::size_t(v)] = n_sectors++;
      sector_old_vertex.push_back(v);
      sector_on_cut.push_back(0);
    } else {
      if (cuts.size() % 2 != 0)
        throw Error("cut: odd number of cut darts at a vertex (cut set is not a curve union)");
      for (int d : cuts) {
        sector_after_dart[std::size_t(d)] = n_sectors++;
        sector_old_vertex.push_back(v);
        sector_on_cut.push_back(1);
      }
    }
  }

  // New darts: uncut edges keep one copy, cut edges are doubled. For a cut
  // dart d, copy L (on the side counterclockwise-after d at its origin) and
  // copy R (side before d). Edges pair {L(d), R(twin d)}.
  std::vector<int> plain_new(std::size_t(n_old_darts), -1);
  std::vector<int> left_new(std::size_t(n_old_darts), -1);
  std::vector<int> right_new(std::size_t(n_old_darts), -1);
  std::vector<int> new_to_old;
  std::vector<int> new_origin_sector;
  auto alloc_pair = [&](int d_a, int old_a, int sec_a, int d_b, int old_b, int sec_b,
                        std::vector<int>& slot_a, std::vector<int>& slot_b) {
    (void)d_a;
    (void)d_b;
    int ida = int(new_to_old.size());
    slot_a[std::size_t(old_a)] = ida;
    new_to_old.push_back(old_a);
    new_origin_sector.push_back(sec_a);
    int idb = int(new_to_old.size());
    slot_b[std::size_t(old_b)] = idb;
    new_to_old.push_back(old_b);
    new_origin_sector.push_back(sec_b);
    return std::pair{ida, idb};
  };

  auto sector_of_noncut_dart = [&](int d) {
    int v = s.dart_origin(d);
    if (whole_vertex_sector[std::size_t(v)] >= 0) return whole_vertex_sector[std::size_t(v)];
    // walk clockwise until the governing cut dart
    int cur = d;
    for (int guard = 0; guard <= s.degree(v); ++guard) {
      cur = s.rotation_prev(cur);
      if (is_cut(cur)) return sector_after_dart[std::size_t(cur)];
    }
    throw Error("cut: sector lookup failed");
  };
  auto sector_before_cut_dart = [&](int d) {
    int cur = d;
    for (int guard = 0; guard <= s.degree(s.dart_origin(d)); ++guard) {
      cur = s.rotation_prev(cur);
      if (is_cut(cur)) return sector_after_dart[std::size_t(cur)];
    }
    throw Error("cut: sector lookup failed");
  };

  for (int e = 0; e < s.edge_count(); ++e) {
    int d = forward_dart(e), t = twin(d);
    if (!cut_edges[std::size_t(e)]) {
      alloc_pair(d, d, sector_of_noncut_dart(d), t, t, sector_of_noncut_dart(t), plain_new,
                 plain_new);
    } else {
      // L(d) lives in sector after d; its partner is R(twin d), in the
      // sector before twin(d).
      alloc_pair(d, d, sector_after_dart[std::size_t(d)], t, t, sector_before_cut_dart(t),
                 left_new, right_new);
      alloc_pair(d, d, sector_before_cut_dart(d), t, t, sector_after_dart[std::size_t(t)],
                 right_new, left_new);
    }
  }

  // Sector rotations.
  std::vector<std::vector<int>> sector_rotation(std::size_t(n_sectors), std::vector<int>{});
  for (int v = 0; v < s.vertex_count(); ++v) {
    const auto& rot = s.rotation(v);
    if (whole_vertex_sector[std::size_t(v)] >= 0) {
      auto& r = sector_rotation[std::size_t(whole_vertex_sector[std::size_t(v)])];
      for (int d : rot) r.push_back(plain_new[std::size_t(d)]);
      continue;
    }
    for (std::size_t i = 0; i < rot.size(); ++i) {
      int d = rot[i];
      if (!is_cut(d)) continue;
      int sec = sector_after_dart[std::size_t(d)];
      auto& r = sector_rotation[std::size_t(sec)];
      r.push_back(left_new[std::size_t(d)]);
      std::size_t j = (i + 1) % rot.size();
      while (!is_cut(rot[j])) {
        r.push_back(plain_new[std::size_t(rot[j])]);
        j = (j + 1) % rot.size();
      }
      r.push_back(right_new[std::size_t(rot[j])]);
    }
  }

  // Components over sectors.
  DisjointSet dsu(n_sectors);
  for (std::size_t nd = 0; nd < new_to_old.size(); nd += 2)
    dsu.unite(new_origin_sector[nd], new_origin_sector[nd + 1]);

  std::map<int, int> root_to_piece;
  std::vector<int> sector_piece(std::size_t(n_sectors), -1);
  int n_pieces = 0;
  for (int sec = 0; sec < n_sectors; ++sec) {
    int r = dsu.find(sec);
    auto it = root_to_piece.find(r);
    if (it == root_to_piece.end()) it = root_to_piece.emplace(r, n_pieces++).first;
    sector_piece[std::size_t(sec)] = it->second;
  }

  // Per-piece renumbering and assembly.
  EdgeCut out;
  out.pieces.resize(std::size_t(n_pieces));
  std::vector<int> sector_local(std::size_t(n_sectors), -1);
  std::vector<std::vector<int>> piece_sectors(std::size_t(n_pieces), std::vector<int>{});
  for (int sec = 0; sec < n_sectors; ++sec) {
    auto& list = piece_sectors[std::size_t(sector_piece[std::size_t(sec)])];
    sector_local[std::size_t(sec)] = int(list.size());
    list.push_back(sec);
  }
  // dart renumbering per piece, preserving pair structure (allocated in pairs)
  std::vector<int> dart_local(new_to_old.size(), -1);
  std::vector<std::vector<int>> piece_dart_to_old(std::size_t(n_pieces), std::vector<int>{});
  for (std::size_t nd = 0; nd < new_to_old.size(); nd += 2) {
    int piece = sector_piece[std::size_t(new_origin_sector[nd])];
    auto& pd = piece_dart_to_old[std::size_t(piece)];
    dart_local[nd] = int(pd.size());
    pd.push_back(new_to_old[nd]);
    dart_local[nd + 1] = int(pd.size());
    pd.push_back(new_to_old[nd + 1]);
  }

  for (int p = 0; p < n_pieces; ++p) {
    SurfaceSpec spec;
    auto& secs = piece_sectors[std::size_t(p)];
    CutPiece& piece = out.pieces[std::size_t(p)];
    for (int sec : secs) {
      std::vector<int> r;
      for (int nd : sector_rotation[std::size_t(sec)]) r.push_back(dart_local[std::size_t(nd)]);
      spec.rotation.push_back(std::move(r));
      piece.vertex_to_old.push_back(sector_old_vertex[std::size_t(sec)]);
      piece.vertex_on_cut.push_back(sector_on_cut[std::size_t(sec)]);
    }
    piece.dart_to_old = piece_dart_to_old[std::size_t(p)];
    piece.surface = build_surface(spec);
  }

  // identify original faces and mark the remaining rim faces as boundary
  out.old_face_piece.assign(std::size_t(s.face_count()), -1);
  out.old_face_local.assign(std::size_t(s.face_count()), -1);
  std::vector<std::vector<char>> face_is_original(std::size_t(n_pieces), std::vector<char>{});
  for (int p = 0; p < n_pieces; ++p)
    face_is_original[std::size_t(p)].assign(std::size_t(out.pieces[std::size_t(p)].surface.face_count()),
                                            0);
  for (int f = 0; f < s.face_count(); ++f) {
    int d0 = s.face(f).front();
    int nd = is_cut(d0) ? right_new[std::size_t(d0)] : plain_new[std::size_t(d0)];
    int piece = sector_piece[std::size_t(new_origin_sector[std::size_t(nd)])];
    int local_dart = dart_local[std::size_t(nd)];
    int local_face = out.pieces[std::size_t(piece)].surface.face_of(local_dart);
    out.old_face_piece[std::size_t(f)] = piece;
    out.old_face_local[std::size_t(f)] = local_face;
    face_is_original[std::size_t(piece)][std::size_t(local_face)] = 1;
  }
  for (int p = 0; p < n_pieces; ++p) {
    CutPiece& piece = out.pieces[std::size_t(p)];
    SurfaceSpec respec;
    respec.rotation.resize(std::size_t(piece.surface.vertex_count()));
    for (int v = 0; v < piece.surface.vertex_count(); ++v)
      respec.rotation[std::size_t(v)] = piece.surface.rotation(v);
    bool any_boundary = false;
    for (int f = 0; f < piece.surface.face_count(); ++f)
      if (!face_is_original[std::size_t(p)][std::size_t(f)]) {
        respec.boundary_face_darts.push_back(piece.surface.face(f).front());
        any_boundary = true;
      }
    // original faces keep their boundary marks from the base surface
    for (int f = 0; f < s.face_count(); ++f)
      if (out.old_face_piece[std::size_t(f)] == p && s.face_is_boundary(f)) {
        int lf = out.old_face_local[std::size_t(f)];
        respec.boundary_face_darts.push_back(piece.surface.face(lf).front());
        any_boundary = true;
      }
    // face identity is stable under the re-mark: same rotations, same trace
    if (any_boundary) piece.surface = build_surface(respec);
  }
  return out;
}

CutResult cut_along(const CombinatorialSurface& s, const EdgeWalk& cycle, int beta_marker_edge) {
  check_walk(s, cycle, "cut cycle");
  if (!is_simple_closed(s, cycle)) throw Error("cut_along: cycle is not embedded (simple closed)");
  std::vector<char> cut(std::size_t(s.edge_count()), 0);
  for (int d : cycle.darts) cut[std::size_t(edge_of(d))] = 1;
  EdgeCut ec = cut_along_edges(s, cut);
  if (ec.pieces.size() == 1)
    throw Error("cut_along: cycle does not separate (one component after cutting)");
  if (ec.pieces.size() != 2) throw Error("cut_along: unexpected component count");
  for (const auto& piece : ec.pieces) {
    if (piece.surface.boundary_count() != 1)
      throw Error("cut_along: side has more than one boundary component");
  }
  int chi_sum = euler_characteristic(ec.pieces[0].surface) +
                euler_characteristic(ec.pieces[1].surface);
  if (chi_sum != euler_characteristic(s)) throw Error("cut_along: Euler characteristic mismatch");

  int beta_piece = -1;
  if (beta_marker_edge >= 0) {
    for (std::size_t p = 0; p < ec.pieces.size(); ++p)
      for (int d : ec.pieces[p].dart_to_old)
        if (edge_of(d) == beta_marker_edge) beta_piece = int(p);
    if (beta_piece < 0) throw Error("cut_along: beta marker edge not found in either side");
  } else {
    beta_piece = 1;
  }
  CutResult r{std::move(ec.pieces[std::size_t(1 - beta_piece)]),
              std::move(ec.pieces[std::size_t(beta_piece)])};
  return r;
}

DoubleResult double_surface(const CombinatorialSurface& s) {
  if (s.closed()) throw Error("double: input surface is closed");
  int g = genus(s), b = s.boundary_count();

  // Boundary hygiene: each boundary walk must be an embedded circle and
  // boundary faces must not share vertices or edges.
  std::vector<int> boundary_face_at_vertex(std::size_t(s.vertex_count()), -1);
  std::vector<char> edge_on_boundary(std::size_t(s.edge_count()), 0);
  std::vector<int> corner_out(std::size_t(s.vertex_count()), -1);  // boundary corner (x->y): y
  std::vector<int> corner_in(std::size_t(s.vertex_count()), -1);   // x
  for (int f = 0; f < s.face_count(); ++f) {
    if (!s.face_is_boundary(f)) continue;
    for (int d : s.face(f)) {
      int v = s.dart_origin(d);
      if (boundary_face_at_vertex[std::size_t(v)] != -1)
        throw Error("double: pinched boundary (vertex on two boundary corners)");
      boundary_face_at_vertex[std::size_t(v)] = f;
      if (edge_on_boundary[std::size_t(edge_of(d))])
        throw Error("double: edge traversed twice by boundary walks");
      edge_on_boundary[std::size_t(edge_of(d))] = 1;
    }
    const auto& walk = s.face(f);
    for (std::size_t i = 0; i < walk.size(); ++i) {
      int prev = walk[(i + walk.size() - 1) % walk.size()];
      int d = walk[i];
      int v = s.dart_origin(d);
      corner_in[std::size_t(v)] = twin(prev);
      corner_out[std::size_t(v)] = d;
    }
  }
  for (int e = 0; e < s.edge_count(); ++e)
    if (edge_on_boundary[std::size_t(e)]) {
      int f0 = s.face_of(forward_dart(e)), f1 = s.face_of(twin(forward_dart(e)));
      if (s.face_is_boundary(f0) && s.face_is_boundary(f1))
        throw Error("double: edge with boundary on both sides is not a bordered surface");
    }

  // mirrored copies for interior vertices and non-boundary edges
  std::vector<int> mirror_vertex(std::size_t(s.vertex_count()), -1);
  int nv = s.vertex_count();
  for (int v = 0; v < s.vertex_count(); ++v)
    if (boundary_face_at_vertex[std::size_t(v)] == -1) mirror_vertex[std::size_t(v)] = nv++;
  std::vector<int> mirror_dart(std::size_t(s.dart_count()), -1);
  std::vector<int> retract(std::size_t(s.dart_count()));
  std::iota(retract.begin(), retract.end(), 0);
  int nd = s.dart_count();
  for (int e = 0; e < s.edge_count(); ++e) {
    int d = forward_dart(e), t = twin(d);
    if (edge_on_boundary[std::size_t(e)]) {
      mirror_dart[std::size_t(d)] = d;
      mirror_dart[std::size_t(t)] = t;
    } else {
      mirror_dart[std::size_t(d)] = nd;
      retract.push_back(d);
      mirror_dart[std::size_t(t)] = nd + 1;
      retract.push_back(t);
      nd += 2;
    }
  }

  SurfaceSpec spec;
  spec.rotation.resize(std::size_t(nv));
  for (int v = 0; v < s.vertex_count(); ++v) {
    const auto& rot = s.rotation(v);
    if (boundary_face_at_vertex[std::size_t(v)] == -1) {
      spec.rotation[std::size_t(v)] = rot;
      auto& m = spec.rotation[std::size_t(mirror_vertex[std::size_t(v)])];
      for (auto it = rot.rbegin(); it != rot.rend(); ++it)
        m.push_back(mirror_dart[std::size_t(*it)]);
    } else {
      // splice: original rotation read from the boundary-corner exit dart,
      // then the mirrored arc reversed with the shared end darts dropped
      int start = corner_out[std::size_t(v)];
      std::vector<int> arc;
      int d = start;
      for (int k = 0; k < s.degree(v); ++k) {
        arc.push_back(d);
        d = s.rotation_next(d);
      }
      auto& r = spec.rotation[std::size_t(v)];
      r = arc;
      for (std::size_t i = arc.size() - 1; i >= 1; --i) {
        if (i == arc.size() - 1) continue;  // shared twin(corner_in) dropped
        r.push_back(mirror_dart[std::size_t(arc[i])]);
      }
      if (arc.back() != corner_in[std::size_t(v)])
        throw Error("double: boundary corner inconsistency");
    }
  }

  DoubleResult out;
  out.surface = build_surface(spec);
  out.retract_dart = std::move(retract);
  out.vacuous_warning = (2 * g + b < 3);
  if (!out.surface.closed()) throw Error("double: result not closed");
  if (euler_characteristic(out.surface) != 2 * euler_characteristic(s))
    throw Error("double: Euler characteristic did not double");
  if (genus(out.surface) != 2 * g + b - 1) throw Error("double: genus formula violated");
  return out;
}

EdgeWalk DoubleResult::retract(const EdgeWalk& w) const {
  EdgeWalk out;
  out.darts.reserve(w.darts.size());
  for (int d : w.darts) out.darts.push_back(retract_dart[std::size_t(d)]);
  return out;
}

}  // namespace covertower

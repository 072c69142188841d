#include "covertower/curves.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstdio>
#include <map>
#include <set>

#include "covertower/homology.hpp"
#include "covertower/surgery.hpp"

namespace covertower {

bool CrossingSet::contains_vertex(int v) const {
  for (const auto& c : points)
    if (c.vertex == v) return true;
  return false;
}

namespace {

std::map<int, int> walk_vertex_positions(const CombinatorialSurface& s, const EdgeWalk& w) {
  std::map<int, int> pos;
  for (int i = 0; i < w.length(); ++i) {
    auto [it, fresh] = pos.emplace(w.vertex_at(s, i), i);
    if (!fresh) throw Error("curve revisits a vertex (not simple)");
  }
  return pos;
}

struct Strand {
  int out;       // outgoing dart continuing the walk
  int back;      // twin of the arriving dart
};

Strand strand_at(const CombinatorialSurface& s, const EdgeWalk& w, int pos) {
  std::size_t n = w.darts.size();
  int in = w.darts[(std::size_t(pos) + n - 1) % n];
  (void)s;
  return Strand{w.darts[std::size_t(pos)], twin(in)};
}

}  // namespace

CrossingSet crossings(const CombinatorialSurface& s, const EdgeWalk& alpha, const EdgeWalk& beta) {
  check_walk(s, alpha, "alpha");
  check_walk(s, beta, "beta");
  if (!alpha.is_closed(s) || !beta.is_closed(s)) throw Error("crossings: open curve");
  std::set<int> alpha_edges, beta_edges;
  for (int d : alpha.darts) alpha_edges.insert(edge_of(d));
  for (int d : beta.darts) beta_edges.insert(edge_of(d));
  for (int e : beta_edges)
    if (alpha_edges.count(e)) throw Error("crossings: curves share an edge (non-transverse)");

  auto apos = walk_vertex_positions(s, alpha);
  auto bpos = walk_vertex_positions(s, beta);

  CrossingSet out;
  for (auto [vtx, ai] : apos) {
    auto it = bpos.find(vtx);
    if (it == bpos.end()) continue;
    Strand a = strand_at(s, alpha, ai);
    Strand b = strand_at(s, beta, it->second);
    // interleaving test: scan the rotation once, recording the strand pattern
    int first_beta = -1;
    bool interleaved = false;
    {
      int d = a.out;
      std::vector<int> pattern;  // 0 = alpha dart, 1 = beta dart
      for (int k = 0; k < s.degree(vtx); ++k) {
        if (d == a.out || d == a.back) pattern.push_back(0);
        else if (d == b.out || d == b.back) {
          if (first_beta < 0) first_beta = d;
          pattern.push_back(1);
        }
        d = s.rotation_next(d);
      }
      std::vector<int> strands;
      for (int x : pattern) strands.push_back(x);
      interleaved = (strands.size() == 4 && strands[0] == 0 && strands[1] == 1 &&
                     strands[2] == 0 && strands[3] == 1);
    }
    if (!interleaved) continue;
    out.points.push_back(Crossing{vtx, ai, it->second, first_beta == b.out});
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const Crossing& x, const Crossing& y) { return x.alpha_pos < y.alpha_pos; });
  return out;
}

CurveArcTriple make_triple(CombinatorialSurface s, EdgeWalk alpha, EdgeWalk beta, EdgeWalk tau) {
  check_walk(s, alpha, "alpha");
  check_walk(s, beta, "beta");
  if (!is_simple_closed(s, alpha)) throw Error("triple: alpha is not a simple closed walk");
  if (!is_simple_closed(s, beta)) throw Error("triple: beta is not a simple closed walk");
  int v = alpha.origin(s), w = beta.origin(s);
  if (tau.empty()) {
    if (v != w) throw Error("triple: empty tau but distinct basepoints");
  } else {
    check_walk(s, tau, "tau");
    if (tau.origin(s) != v || tau.target(s) != w)
      throw Error("triple: tau does not join the basepoints");
  }

  // transversality: every shared vertex has degree 4 with interleaved strands
  auto apos = walk_vertex_positions(s, alpha);
  auto bpos = walk_vertex_positions(s, beta);
  int shared = 0;
  for (auto [vtx, ai] : apos) {
    (void)ai;
    if (!bpos.count(vtx)) continue;
    ++shared;
    if (s.degree(vtx) != 4)
      throw Error("triple: shared vertex of degree != 4 (not a transverse crossing)");
  }
  CrossingSet cs = crossings(s, alpha, beta);
  if (int(cs.size()) != shared)
    throw Error("triple: tangential shared vertex (strands do not interleave)");
  return CurveArcTriple{std::move(s), std::move(alpha), std::move(beta), std::move(tau),
                        std::move(cs)};
}

OverlayAnalysis analyze_overlay(const CombinatorialSurface& s, const EdgeWalk& alpha,
                                const EdgeWalk& beta) {
  CrossingSet cs = crossings(s, alpha, beta);
  std::set<int> crossing_vertices;
  for (const auto& c : cs.points) crossing_vertices.insert(c.vertex);

  std::vector<char> cut(std::size_t(s.edge_count()), 0);
  for (int d : alpha.darts) cut[std::size_t(edge_of(d))] = 1;
  for (int d : beta.darts) cut[std::size_t(edge_of(d))] = 1;
  EdgeCut ec = cut_along_edges(s, cut);

  OverlayAnalysis out;
  out.region_of_face.assign(std::size_t(s.face_count()), -1);
  for (int f = 0; f < s.face_count(); ++f)
    out.region_of_face[std::size_t(f)] = ec.old_face_piece[std::size_t(f)];
  for (std::size_t p = 0; p < ec.pieces.size(); ++p) {
    const CutPiece& piece = ec.pieces[p];
    OverlayRegion r;
    for (int f = 0; f < s.face_count(); ++f)
      if (ec.old_face_piece[std::size_t(f)] == int(p)) r.faces.push_back(f);
    r.euler = euler_characteristic(piece.surface);
    r.boundary_components = piece.surface.boundary_count();
    r.corners = 0;
    for (std::size_t pv = 0; pv < piece.vertex_to_old.size(); ++pv)
      if (piece.vertex_on_cut[pv] && crossing_vertices.count(piece.vertex_to_old[pv]))
        ++r.corners;
    out.regions.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < out.regions.size(); ++i) {
    const auto& r = out.regions[i];
    if (!r.is_disc()) continue;
    if (r.corners == 2 && !out.bigon) out.bigon = int(i);
    if (r.corners == 0 && !out.null_disc) out.null_disc = int(i);
  }
  return out;
}

MinimalityResult is_minimal_position(const CombinatorialSurface& s, const EdgeWalk& alpha,
                                     const EdgeWalk& beta) {
  OverlayAnalysis a = analyze_overlay(s, alpha, beta);
  MinimalityResult r;
  r.minimal = a.minimal();
  if (a.bigon) r.witness = a.regions[std::size_t(*a.bigon)];
  else if (a.null_disc) r.witness = a.regions[std::size_t(*a.null_disc)];
  return r;
}

namespace {

struct BigonData {
  // alpha-side arc P -> Q as a subwalk of alpha (alpha's own orientation),
  // beta-side arc Q -> P (either orientation along beta)
  std::vector<int> u;
  std::vector<int> b;
  int d_in;   // alpha dart entering P
  int d_out;  // alpha dart leaving Q
  std::set<int> region_faces;
};

BigonData extract_bigon(const CombinatorialSurface& s, const EdgeWalk& alpha,
                        const EdgeWalk& beta, const OverlayAnalysis& an, int region_index) {
  // recover the rim walk of the region: cut again and read the boundary face
  std::vector<char> cut(std::size_t(s.edge_count()), 0);
  for (int d : alpha.darts) cut[std::size_t(edge_of(d))] = 1;
  for (int d : beta.darts) cut[std::size_t(edge_of(d))] = 1;
  EdgeCut ec = cut_along_edges(s, cut);
  const OverlayRegion& region = an.regions[std::size_t(region_index)];
  int piece_index = an.region_of_face[std::size_t(region.faces.front())];
  const CutPiece& piece = ec.pieces[std::size_t(piece_index)];
  int rim_face = -1;
  for (int f = 0; f < piece.surface.face_count(); ++f)
    if (piece.surface.face_is_boundary(f)) rim_face = f;
  if (rim_face < 0) throw Error("bigon: region has no rim");
  std::vector<int> rim_old;
  for (int d : piece.surface.face(rim_face)) rim_old.push_back(piece.dart_to_old[std::size_t(d)]);

  std::set<int> alpha_edges;
  for (int d : alpha.darts) alpha_edges.insert(edge_of(d));
  auto on_alpha = [&](int dart) { return alpha_edges.count(edge_of(dart)) != 0; };

  // rotate the rim so it starts at the beginning of the alpha run
  std::size_t n = rim_old.size();
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i)
    if (on_alpha(rim_old[i]) && !on_alpha(rim_old[(i + n - 1) % n])) start = i;
  if (start == n) throw Error("bigon: rim does not alternate between the curves");
  std::vector<int> rot;
  for (std::size_t i = 0; i < n; ++i) rot.push_back(rim_old[(start + i) % n]);
  std::size_t split = 0;
  while (split < n && on_alpha(rot[split])) ++split;
  for (std::size_t i = split; i < n; ++i)
    if (on_alpha(rot[i])) throw Error("bigon: rim has more than two corners");

  std::vector<int> u_run(rot.begin(), rot.begin() + long(split));
  std::vector<int> b_run(rot.begin() + long(split), rot.end());

  // orient the alpha run with alpha itself
  std::set<int> alpha_darts(alpha.darts.begin(), alpha.darts.end());
  bool forward = alpha_darts.count(u_run.front()) != 0;
  BigonData bd;
  if (forward) {
    bd.u = u_run;
    bd.b = b_run;
  } else {
    for (auto it = u_run.rbegin(); it != u_run.rend(); ++it) bd.u.push_back(twin(*it));
    for (auto it = b_run.rbegin(); it != b_run.rend(); ++it) bd.b.push_back(twin(*it));
  }
  // locate u inside alpha and read the adjacent darts
  std::size_t an_ = alpha.darts.size();
  std::size_t at = an_;
  for (std::size_t i = 0; i < an_; ++i)
    if (alpha.darts[i] == bd.u.front()) at = i;
  if (at == an_) throw Error("bigon: arc not found in alpha");
  for (std::size_t k = 0; k < bd.u.size(); ++k)
    if (alpha.darts[(at + k) % an_] != bd.u[std::size_t(k)])
      throw Error("bigon: alpha-side arc is not contiguous in alpha");
  bd.d_in = alpha.darts[(at + an_ - 1) % an_];
  bd.d_out = alpha.darts[(at + bd.u.size()) % an_];
  if (edge_of(bd.d_in) == edge_of(bd.d_out))
    throw Error("bigon: alpha too short to reroute (shared adjacent edge)");
  bd.region_faces.insert(region.faces.begin(), region.faces.end());
  return bd;
}

struct MoveResult {
  CombinatorialSurface surface;
  EdgeWalk alpha;
};

// Pushes the alpha-side of the bigon across the beta-side: a parallel track
// is inserted along the far side of b, the far-side darts of b's interior
// vertices reattach to the track, and alpha reroutes through it.
MoveResult build_bigon_move(const CombinatorialSurface& s, const EdgeWalk& alpha,
                            const OverlayAnalysis& an, const BigonData& bd, int handedness) {
  int j = int(bd.b.size());
  int old_darts = s.dart_count();
  int next = old_darts;
  // split halves: edge(d_in) keeps (x -> s_p), pair (n10: s_p->P, n11: P->s_p)
  int n10 = next++, n11 = next++;
  // edge(d_out) keeps (Q -> s_q), pair (n20: s_q->z, n21: z->s_q)
  int n20 = next++, n21 = next++;
  // track segments seg_i (i=1..j): pv(i-1) -> pv(i), darts (s_i, twin)
  std::vector<int> seg_fwd(std::size_t(j), 0);
  for (int i = 0; i < j; ++i) {
    seg_fwd[std::size_t(i)] = next;
    next += 2;
  }

  int old_vertices = s.vertex_count();
  int sp_vertex = old_vertices;      // on edge(d_in), near P
  int sq_vertex = old_vertices + 1;  // on edge(d_out), near Q
  auto tv_vertex = [&](int i) { return old_vertices + 1 + i; };  // parallels y_i, 1<=i<=j-1

  std::vector<std::vector<int>> rot;
  rot.reserve(std::size_t(old_vertices + j + 1));
  for (int v = 0; v < old_vertices; ++v) rot.push_back(s.rotation(v));

  int P = s.dart_target(bd.d_in);
  int z = s.dart_target(bd.d_out);
  for (auto& d : rot[std::size_t(P)])
    if (d == twin(bd.d_in)) d = n11;
  for (auto& d : rot[std::size_t(z)])
    if (d == twin(bd.d_out)) d = n21;

  // interior vertices of b: move far-side darts onto the track
  std::vector<std::vector<int>> far(std::size_t(j), std::vector<int>{});  // far[i] = darts leaving y_i, 1<=i<=j-1
  for (int i = 1; i < j; ++i) {
    int y = s.dart_target(bd.b[std::size_t(i - 1)]);
    int in_back = twin(bd.b[std::size_t(i - 1)]);
    int out = bd.b[std::size_t(i)];
    // the gap (in_back -> out) is on the bigon side iff its first corner face
    // lies in the region
    bool gap_a_bigon =
        bd.region_faces.count(s.face_of(s.rotation_next(in_back))) != 0;
    int gap_from = gap_a_bigon ? out : in_back;
    int gap_to = gap_a_bigon ? in_back : out;
    std::vector<int>& fr = far[std::size_t(i)];
    for (int d = s.rotation_next(gap_from); d != gap_to; d = s.rotation_next(d))
      fr.push_back(d);
    auto& r = rot[std::size_t(y)];
    std::vector<int> kept;
    for (int d : r)
      if (std::find(fr.begin(), fr.end(), d) == fr.end()) kept.push_back(d);
    r = std::move(kept);
  }

  // new rotations; the three orientation bits flip the local cyclic orders
  auto orient = [&](std::vector<int> v, int bit) {
    if ((handedness >> bit) & 1) std::reverse(v.begin(), v.end());
    return v;
  };
  rot.push_back(orient({n10, twin(bd.d_in), twin(seg_fwd[std::size_t(j - 1)])}, 0));  // s_p
  rot.push_back(orient({n20, seg_fwd[0], twin(bd.d_out)}, 1));                        // s_q
  // track darts at tv_i: toward pv(i-1) then toward pv(i+1), the far darts
  // between them on the far side
  for (int i = 1; i < j; ++i) {
    std::vector<int> r = {twin(seg_fwd[std::size_t(i - 1)]), seg_fwd[std::size_t(i)]};
    for (int d : far[std::size_t(i)]) r.push_back(d);
    rot.push_back(orient(std::move(r), 2));
  }
  (void)tv_vertex;
  (void)sp_vertex;
  (void)sq_vertex;

  SurfaceSpec spec;
  spec.rotation = std::move(rot);
  for (int f = 0; f < s.face_count(); ++f)
    if (s.face_is_boundary(f)) {
      // boundary faces never touch the move site for valid inputs: the
      // region machinery rejects bordered regions adjacent to curves later
      spec.boundary_face_darts.push_back(s.face(f).front());
    }
  MoveResult mr;
  mr.surface = build_surface(spec);

  // rerouted alpha: ... d_in, track reversed, n20, ...
  std::size_t n = alpha.darts.size();
  std::size_t at = 0;
  while (alpha.darts[at] != bd.u.front()) ++at;
  EdgeWalk a2;
  a2.darts.push_back(bd.d_in);
  for (int i = j - 1; i >= 0; --i) a2.darts.push_back(twin(seg_fwd[std::size_t(i)]));
  a2.darts.push_back(n20);
  for (std::size_t k = bd.u.size() + 1; k + 1 < n; ++k)
    a2.darts.push_back(alpha.darts[(at + k) % n]);
  mr.alpha = a2;
  (void)an;
  return mr;
}

thread_local std::string g_move_reject;

bool validate_move(const CombinatorialSurface& old_s, const EdgeWalk& old_alpha,
                   const EdgeWalk& beta, const MoveResult& mr, const BigonData& bd) {
  const CombinatorialSurface& t = mr.surface;
  g_move_reject.clear();
  if (!t.connected()) return (g_move_reject = "disconnected", false);
  if (euler_characteristic(t) != euler_characteristic(old_s))
    return (g_move_reject = "chi changed", false);
  if (t.face_count() != old_s.face_count() + 1)
    return (g_move_reject = "face count " + std::to_string(t.face_count()) + " vs " +
                            std::to_string(old_s.face_count()),
            false);
  try {
    check_walk(t, mr.alpha, "alpha'");
    check_walk(t, beta, "beta on refined surface");
    if (!is_simple_closed(t, mr.alpha) || !is_simple_closed(t, beta))
      return (g_move_reject = "curve not simple closed", false);
    CrossingSet before = crossings(old_s, old_alpha, beta);
    CrossingSet after = crossings(t, mr.alpha, beta);
    if (after.size() + 2 != before.size())
      return (g_move_reject = "crossings " + std::to_string(after.size()), false);
    int P = old_s.dart_target(bd.d_in);
    int Q = old_s.dart_origin(bd.d_out);
    for (const auto& c : after.points)
      if (c.vertex == P || c.vertex == Q)
        return (g_move_reject = "old corner crossing survived", false);
    // homology consistency: the rerouted curve stays in the class of the
    // transported original (the move is supported in a disc);
    // d_in -> (d_in, n10) and d_out -> (d_out, n20) through the split vertices
    EdgeWalk transported;
    int n10 = old_s.dart_count();
    int n20 = old_s.dart_count() + 2;
    for (int d : old_alpha.darts) {
      if (d == bd.d_in) {
        transported.darts.push_back(d);
        transported.darts.push_back(n10);
      } else if (d == bd.d_out) {
        transported.darts.push_back(d);
        transported.darts.push_back(n20);
      } else {
        transported.darts.push_back(d);
      }
    }
    H1Space h(t);
    if (h.class_of(transported) != h.class_of(mr.alpha))
      return (g_move_reject = "class changed", false);
  } catch (const Error& e) {
    g_move_reject = e.what();
    return false;
  }
  return true;
}

}  // namespace

ReduceResult reduce_to_minimal(const CombinatorialSurface& s, const EdgeWalk& alpha,
                               const EdgeWalk& beta) {
  ReduceResult cur{s, alpha, beta, crossings(s, alpha, beta), 0};
  long cap = long(s.edge_count()) * long(cur.crossing_set.size()) + 1;
  for (long iter = 0; iter < cap; ++iter) {
    OverlayAnalysis an = analyze_overlay(cur.surface, cur.alpha, cur.beta);
    if (!an.bigon) {
      cur.crossing_set = crossings(cur.surface, cur.alpha, cur.beta);
      return cur;
    }
    BigonData bd = extract_bigon(cur.surface, cur.alpha, cur.beta, an, *an.bigon);
    bool done = false;
    for (int h = 0; h < 8 && !done; ++h) {
      MoveResult mr = build_bigon_move(cur.surface, cur.alpha, an, bd, h);
      if (std::getenv("COVERTOWER_DEBUG_BIGON")) {
        bool ok = validate_move(cur.surface, cur.alpha, cur.beta, mr, bd);
        fprintf(stderr, "h=%d ok=%d reason=%s V=%d E=%d F=%d (old V=%d E=%d F=%d)\n", h, int(ok),
                g_move_reject.c_str(), mr.surface.vertex_count(), mr.surface.edge_count(),
                mr.surface.face_count(), cur.surface.vertex_count(), cur.surface.edge_count(),
                cur.surface.face_count());
      }
      if (validate_move(cur.surface, cur.alpha, cur.beta, mr, bd)) {
        cur.surface = std::move(mr.surface);
        cur.alpha = std::move(mr.alpha);
        ++cur.moves;
        done = true;
      }
    }
    if (!done)
      throw Error("reduce_to_minimal: bigon move failed to validate (" + g_move_reject + ")");
  }
  throw Error("reduce_to_minimal: iteration cap exceeded");
}

}  // namespace covertower

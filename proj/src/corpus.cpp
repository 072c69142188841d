#include "covertower/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "covertower/arcs.hpp"
#include "covertower/homology.hpp"
#include "covertower/surgery.hpp"

namespace covertower::corpus {

namespace {

int fwd(int edge) { return forward_dart(edge); }

struct OverlaySkeleton {
  SurfaceSpec spec;
  EdgeWalk alpha, beta, tau;
};

OverlaySkeleton overlay_skeleton(int n, const std::vector<int>& order,
                                 const std::vector<char>& signs) {
  // vertices: crossings x_i = i, midpoints mA_i = n+i, mB_j = 2n+j
  // edges: A1_i = 2i (x_i -> mA_i), A2_i = 2i+1 (mA_i -> x_{i+1}),
  //        B1_j = 2n+2j (x_{order[j]} -> mB_j), B2_j = 2n+2j+1 (mB_j -> x_{order[j+1]})
  std::vector<int> inverse(std::size_t(n), 0);
  for (int j = 0; j < n; ++j) inverse[std::size_t(order[std::size_t(j)])] = j;

  OverlaySkeleton sk;
  sk.spec.rotation.resize(std::size_t(3 * n));
  auto a1 = [&](int i) { return 2 * i; };
  auto a2 = [&](int i) { return 2 * i + 1; };
  auto b1 = [&](int j) { return 2 * n + 2 * j; };
  auto b2 = [&](int j) { return 2 * n + 2 * j + 1; };

  for (int i = 0; i < n; ++i) {
    int k = inverse[std::size_t(i)];
    int a_out = fwd(a1(i));
    int a_back = twin(fwd(a2((i + n - 1) % n)));
    int b_out = fwd(b1(k));
    int b_back = twin(fwd(b2((k + n - 1) % n)));
    auto& rx = sk.spec.rotation[std::size_t(i)];
    if (signs[std::size_t(i)]) rx = {a_out, b_out, a_back, b_back};
    else rx = {a_out, b_back, a_back, b_out};
    sk.spec.rotation[std::size_t(n + i)] = {fwd(a2(i)), twin(fwd(a1(i)))};
    sk.spec.rotation[std::size_t(2 * n + i)] = {fwd(b2(i)), twin(fwd(b1(i)))};
  }

  sk.alpha.darts.push_back(fwd(a2(0)));
  for (int i = 1; i < n; ++i) {
    sk.alpha.darts.push_back(fwd(a1(i)));
    sk.alpha.darts.push_back(fwd(a2(i)));
  }
  sk.alpha.darts.push_back(fwd(a1(0)));
  sk.beta.darts.push_back(fwd(b2(0)));
  for (int j = 1; j < n; ++j) {
    sk.beta.darts.push_back(fwd(b1(j)));
    sk.beta.darts.push_back(fwd(b2(j)));
  }
  sk.beta.darts.push_back(fwd(b1(0)));

  int j0 = inverse[0];
  sk.tau.darts.push_back(twin(fwd(a1(0))));
  if (j0 == 0) {
    sk.tau.darts.push_back(fwd(b1(0)));
  } else {
    for (int t = j0 - 1; t >= 1; --t) {
      sk.tau.darts.push_back(twin(fwd(b2(t))));
      sk.tau.darts.push_back(twin(fwd(b1(t))));
    }
    sk.tau.darts.push_back(twin(fwd(b2(0))));
  }
  return sk;
}

int midpoint_dart_on_face(const CombinatorialSurface& s, int face, int n_crossings) {
  for (int d : s.face(face))
    if (s.dart_origin(d) >= n_crossings) return d;
  throw Error("corpus: face without a midpoint vertex");
}

}  // namespace

std::optional<CurveArcTriple> build_overlay_pair(const OverlayParams& p) {
  if (int(p.beta_order.size()) != p.n || int(p.signs.size()) != p.n)
    throw Error("corpus: overlay parameter sizes");
  OverlaySkeleton sk = overlay_skeleton(p.n, p.beta_order, p.signs);
  CombinatorialSurface bare = build_surface(sk.spec);

  std::vector<int> corners(std::size_t(bare.face_count()), 0);
  for (int f = 0; f < bare.face_count(); ++f)
    for (int d : bare.face(f))
      if (bare.dart_origin(d) < p.n) ++corners[std::size_t(f)];

  if (p.puncture_instead) {
    int pf = p.extra_face;
    if (pf < 0 || pf >= bare.face_count()) return std::nullopt;
    SurfaceSpec spec = sk.spec;
    spec.boundary_face_darts.push_back(bare.face(pf).front());
    for (int f = 0; f < bare.face_count(); ++f) {
      if (f == pf) continue;
      if (corners[std::size_t(f)] <= 2)
        spec.face_genus.push_back({midpoint_dart_on_face(bare, f, p.n), 1});
    }
    CombinatorialSurface surf = build_surface(spec);
    if (genus(surf) != p.genus_target) return std::nullopt;
    CurveArcTriple t = make_triple(std::move(surf), sk.alpha, sk.beta, sk.tau);
    if (int(t.crossing_set.size()) != p.n) return std::nullopt;
    if (!is_minimal_position(t.surface, t.alpha, t.beta).minimal) return std::nullopt;
    return t;
  }

  std::vector<int> fatten(std::size_t(bare.face_count()), 0);
  int kept_bigon = -1;
  for (int f = 0; f < bare.face_count(); ++f) {
    if (corners[std::size_t(f)] > 2) continue;
    if (p.keep_one_bigon && kept_bigon < 0 && corners[std::size_t(f)] == 2) {
      kept_bigon = f;
      continue;
    }
    fatten[std::size_t(f)] = 1;
  }
  if (p.keep_one_bigon && kept_bigon < 0) return std::nullopt;
  int committed = std::accumulate(fatten.begin(), fatten.end(), 0);
  int budget = p.genus_target - genus(bare) - committed;
  if (budget < 0) return std::nullopt;
  if (budget > 0) {
    int target = p.extra_face;
    if (target == kept_bigon) return std::nullopt;
    if (target >= bare.face_count()) return std::nullopt;
    if (target < 0) {
      for (int f = 0; f < bare.face_count(); ++f)
        if (f != kept_bigon && (fatten[std::size_t(f)] > 0 || target < 0)) {
          if (fatten[std::size_t(f)] > 0) {
            target = f;
            break;
          }
          if (target < 0) target = f;
        }
    }
    if (target < 0) return std::nullopt;
    fatten[std::size_t(target)] += budget;
  }

  SurfaceSpec spec = sk.spec;
  for (int f = 0; f < bare.face_count(); ++f)
    if (fatten[std::size_t(f)] > 0)
      spec.face_genus.push_back({midpoint_dart_on_face(bare, f, p.n), fatten[std::size_t(f)]});
  CombinatorialSurface surf = build_surface(spec);
  if (genus(surf) != p.genus_target) return std::nullopt;
  CurveArcTriple t = make_triple(std::move(surf), sk.alpha, sk.beta, sk.tau);
  if (int(t.crossing_set.size()) != p.n) return std::nullopt;
  auto an = analyze_overlay(t.surface, t.alpha, t.beta);
  if (p.keep_one_bigon) {
    if (!an.bigon) return std::nullopt;
  } else if (!an.minimal()) {
    return std::nullopt;
  }
  return t;
}

CurveArcTriple search_overlay(int n, int genus_target, bool keep_one_bigon,
                              const std::function<bool(const CurveArcTriple&)>& pred,
                              const std::string& what, bool puncture) {
  std::vector<int> tail;
  for (int i = 1; i < n; ++i) tail.push_back(i);
  do {
    std::vector<int> order = {0};
    order.insert(order.end(), tail.begin(), tail.end());
    for (int sign_bits = 0; sign_bits < (1 << n); ++sign_bits) {
      std::vector<char> signs;
      for (int i = 0; i < n; ++i) signs.push_back(char((sign_bits >> i) & 1));
      for (int extra = puncture ? 0 : -1; extra < 3 * n + 4; ++extra) {
        OverlayParams p;
        p.n = n;
        p.beta_order = order;
        p.signs = signs;
        p.genus_target = genus_target;
        p.keep_one_bigon = keep_one_bigon;
        p.extra_face = extra;
        p.puncture_instead = puncture;
        std::optional<CurveArcTriple> t;
        try {
          t = build_overlay_pair(p);
        } catch (const Error&) {
          continue;
        }
        if (!t) continue;
        try {
          if (pred(*t)) return std::move(*t);
        } catch (const Error&) {
        }
      }
    }
  } while (std::next_permutation(tail.begin(), tail.end()));
  throw Error("corpus: no overlay configuration found for " + what);
}

namespace {

bool classes_equal_nonzero(const CurveArcTriple& t) {
  H1Space h(t.surface);
  F2Vector a = h.class_of(t.alpha), b = h.class_of(t.beta);
  return !a.is_zero() && a == b;
}

bool has_alpha_beta_annulus(const CurveArcTriple& t) {
  std::vector<char> cut(std::size_t(t.surface.edge_count()), 0);
  for (int d : t.alpha.darts) cut[std::size_t(edge_of(d))] = 1;
  for (int d : t.beta.darts) cut[std::size_t(edge_of(d))] = 1;
  std::set<int> alpha_edges;
  for (int d : t.alpha.darts) alpha_edges.insert(edge_of(d));
  EdgeCut ec = cut_along_edges(t.surface, cut);
  for (const auto& piece : ec.pieces) {
    if (euler_characteristic(piece.surface) != 0) continue;
    if (piece.surface.boundary_count() != 2) continue;
    bool has_alpha_rim = false, has_beta_rim = false, mixed = false;
    for (int f = 0; f < piece.surface.face_count(); ++f) {
      if (!piece.surface.face_is_boundary(f)) continue;
      bool any_a = false, any_b = false;
      for (int d : piece.surface.face(f)) {
        int old_edge = edge_of(piece.dart_to_old[std::size_t(d)]);
        (alpha_edges.count(old_edge) ? any_a : any_b) = true;
      }
      if (any_a && any_b) mixed = true;
      if (any_a) has_alpha_rim = true;
      if (any_b) has_beta_rim = true;
    }
    if (!mixed && has_alpha_rim && has_beta_rim) return true;
  }
  return false;
}

CurveArcTriple checked(CurveArcTriple t, bool want_minimal, const std::string& name) {
  if (want_minimal && !is_minimal_position(t.surface, t.alpha, t.beta).minimal)
    throw Error("corpus: " + name + " is not in minimal position");
  return t;
}

}  // namespace

CurveArcTriple g2_one_crossing() {
  return search_overlay(1, 2, false,
                        [](const CurveArcTriple& t) { return t.crossing_set.size() == 1; },
                        "g2-N1");
}

CurveArcTriple g2_two_crossings_good() {
  return search_overlay(2, 2, false,
                        [](const CurveArcTriple& t) {
                          if (!classes_equal_nonzero(t)) return false;
                          ArcContext ctx = make_arc_context(t);
                          auto arcs = select_disjoint(t, beta_arcs(t));
                          return !relative_class(t, ctx, arcs[0]).is_zero();
                        },
                        "g2-N2-good");
}

CurveArcTriple g2_two_crossings_bad() {
  // the waist of genus 2 decomposed as mu.eta: alpha = mu + a handle-1 arc,
  // beta = eta + a handle-2 arc, crossing at the waist points p1, p2
  // edges: M1=0 (p1->m_mu), M2=1 (m_mu->p2), H1=2 (p2->m_eta), H2=3
  //        (m_eta->p1), A1=4 (p2->mA), A2=5 (mA->p1), B1=6 (p1->mB),
  //        B2=7 (mB->p2), Qa=8 (loop at mA), Qb=9 (loop at mB)
  for (int variant = 0; variant < 4; ++variant) {
    SurfaceSpec spec;
    spec.rotation.resize(6);
    spec.rotation[0] =
        (variant & 1) ? std::vector<int>{0, 12, 11, 7} : std::vector<int>{0, 7, 11, 12};
    spec.rotation[1] =
        (variant & 2) ? std::vector<int>{8, 4, 3, 15} : std::vector<int>{8, 15, 3, 4};
    spec.rotation[2] = {2, 1};
    spec.rotation[3] = {6, 5};
    spec.rotation[4] = {10, 16, 9, 17};
    spec.rotation[5] = {14, 18, 13, 19};
    CombinatorialSurface bare;
    try {
      bare = build_surface(spec);
    } catch (const Error&) {
      continue;
    }
    // cap to genus 2 when the trace leaves spare Euler characteristic
    int g0 = genus(bare);
    if (g0 > 2) continue;
    if (g0 < 2) {
      int deficit = 2 - g0;
      if (bare.face_count() < 1) continue;
      spec.face_genus = {{bare.face(0).front(), deficit}};
      // avoid attaching at a crossing
      bool ok = false;
      for (int d : bare.face(0))
        if (bare.dart_origin(d) >= 2) {
          spec.face_genus[0].first = d;
          ok = true;
          break;
        }
      if (!ok) continue;
    }
    CombinatorialSurface surf;
    try {
      surf = build_surface(spec);
    } catch (const Error&) {
      continue;
    }
    if (genus(surf) != 2) continue;
    CurveArcTriple t;
    try {
      t = make_triple(std::move(surf), EdgeWalk{{10, 0, 2, 8}}, EdgeWalk{{6, 12, 14, 4}},
                      EdgeWalk{{10, 7}});
    } catch (const Error&) {
      continue;
    }
    if (!classes_equal_nonzero(t)) continue;
    if (!is_minimal_position(t.surface, t.alpha, t.beta).minimal) continue;
    try {
      ArcContext ctx = make_arc_context(t);
      auto arcs = select_disjoint(t, beta_arcs(t));
      if (!relative_class(t, ctx, arcs[0]).is_zero()) continue;
      SeparatingPairing p = make_separating_pairing(t, ctx, arcs[0]);
      if (p.genus_away != 1 || p.genus_beta != 1) continue;
    } catch (const Error&) {
      continue;
    }
    return t;
  }
  throw Error("corpus: no bad-arc variant worked");
}

CurveArcTriple g2_four_crossings() {
  return search_overlay(4, 2, false, classes_equal_nonzero, "g2-N4");
}

CurveArcTriple g3_six_crossings() {
  return search_overlay(6, 3, false, classes_equal_nonzero, "g3-N6");
}

CurveArcTriple g2_same_sign_pair() {
  return search_overlay(2, 2, false,
                        [](const CurveArcTriple& t) {
                          return classes_equal_nonzero(t) &&
                                 t.crossing_set.points[0].sign == t.crossing_set.points[1].sign;
                        },
                        "g2-same-sign");
}

CurveArcTriple g2_wiggle() {
  return search_overlay(4, 2, true,
                        [](const CurveArcTriple& t) {
                          auto an = analyze_overlay(t.surface, t.alpha, t.beta);
                          if (!an.bigon) return false;
                          ReduceResult r = reduce_to_minimal(t.surface, t.alpha, t.beta);
                          return r.crossing_set.size() == 2 &&
                                 is_minimal_position(r.surface, r.alpha, r.beta).minimal;
                        },
                        "g2-wiggle");
}

CurveArcTriple g2_disjoint_diff() {
  // spine of genus 2: alpha and beta are the two handle cores, each with a
  // chord crossing to its other side, joined by one connector
  // edges: alpha1=0 (a0->a1), alpha2=1, Qa=2 (a0->a1), beta1=3 (b0->b1),
  //        beta2=4, Qb=5 (b0->b1), c=6 (a0->b0)
  for (int variant = 0; variant < 16; ++variant) {
    SurfaceSpec spec;
    spec.rotation.resize(4);
    spec.rotation[0] = (variant & 1) ? std::vector<int>{0, 4, 3, 12} : std::vector<int>{0, 12, 4, 3};
    spec.rotation[1] = (variant & 2) ? std::vector<int>{2, 1, 5} : std::vector<int>{2, 5, 1};
    spec.rotation[2] = (variant & 4) ? std::vector<int>{6, 10, 9, 13} : std::vector<int>{6, 13, 10, 9};
    spec.rotation[3] = (variant & 8) ? std::vector<int>{8, 7, 11} : std::vector<int>{8, 11, 7};
    CombinatorialSurface surf;
    try {
      surf = build_surface(spec);
    } catch (const Error&) {
      continue;
    }
    if (genus(surf) != 2) continue;
    CurveArcTriple t;
    try {
      t = make_triple(std::move(surf), EdgeWalk{{0, 2}}, EdgeWalk{{6, 8}}, EdgeWalk{{12}});
    } catch (const Error&) {
      continue;
    }
    H1Space h(t.surface);
    F2Vector a = h.class_of(t.alpha), b = h.class_of(t.beta);
    if (a.is_zero() || b.is_zero() || a == b) continue;
    if (!is_minimal_position(t.surface, t.alpha, t.beta).minimal) continue;
    return t;
  }
  throw Error("corpus: no disjoint-diff variant worked");
}

CurveArcTriple g3_disjoint_bp() {
  // two-ladder chain between parallel circles: a torus; one handle added on
  // each side annulus makes the curves homologous, nonzero and nonisotopic
  for (int variant = 0; variant < 4; ++variant) {
    SurfaceSpec spec;
    spec.rotation.resize(4);
    spec.rotation[0] = {0, 8, 3, 12};
    spec.rotation[1] = {2, 10, 1, 14};
    spec.rotation[2] = (variant & 1) ? std::vector<int>{4, 13, 7, 9} : std::vector<int>{4, 9, 7, 13};
    spec.rotation[3] = (variant & 2) ? std::vector<int>{6, 15, 5, 11} : std::vector<int>{6, 11, 5, 15};
    CombinatorialSurface bare = build_surface(spec);
    if (bare.face_count() != 4) continue;
    // one handle on a c-side face, one on a d-side face
    int cface = -1, dface = -1;
    for (int f = 0; f < bare.face_count(); ++f)
      for (int d : bare.face(f)) {
        if (edge_of(d) == 4 && cface < 0) cface = f;
        if (edge_of(d) == 6 && dface < 0 && f != cface) dface = f;
      }
    if (cface < 0 || dface < 0) continue;
    spec.face_genus = {{bare.face(cface).front(), 1}, {bare.face(dface).front(), 1}};
    CombinatorialSurface surf = build_surface(spec);
    if (genus(surf) != 3) continue;
    CurveArcTriple t =
        make_triple(std::move(surf), EdgeWalk{{0, 2}}, EdgeWalk{{4, 6}}, EdgeWalk{{8}});
    if (!classes_equal_nonzero(t)) continue;
    if (has_alpha_beta_annulus(t)) continue;
    if (!is_minimal_position(t.surface, t.alpha, t.beta).minimal) continue;
    return t;
  }
  throw Error("corpus: no bp chain variant worked");
}

CurveArcTriple g2_disjoint_sep() {
  // alpha bounds a one-holed torus containing beta as its core
  for (int variant = 0; variant < 8; ++variant) {
    SurfaceSpec spec;
    spec.rotation.resize(4);
    spec.rotation[0] = {0, 10, 3};  // a0
    spec.rotation[1] = {2, 1};      // a1
    // b0 carries beta strands, the chord Q and the connector c
    spec.rotation[2] = (variant & 1) ? std::vector<int>{4, 8, 7, 11} : std::vector<int>{4, 11, 7, 8};
    spec.rotation[3] = (variant & 2) ? std::vector<int>{6, 5, 9} : std::vector<int>{6, 9, 5};
    CombinatorialSurface bare = build_surface(spec);
    // cap alpha's far side
    int far_face = -1;
    for (int f = 0; f < bare.face_count(); ++f) {
      bool only_alpha = true;
      for (int d : bare.face(f))
        if (edge_of(d) > 1) only_alpha = false;
      if (only_alpha) far_face = f;
    }
    if (far_face < 0) continue;
    SurfaceSpec fat = spec;
    fat.face_genus = {{bare.face(far_face).front(), 1}};
    int extra = (variant & 4) ? 1 : 0;
    if (extra) {
      int other = far_face == 0 ? 1 : 0;
      if (other >= bare.face_count()) continue;
      fat.face_genus.push_back({bare.face(other).front(), 1});
    }
    CombinatorialSurface surf;
    try {
      surf = build_surface(fat);
    } catch (const Error&) {
      continue;
    }
    if (genus(surf) != 2) continue;
    CurveArcTriple t =
        make_triple(std::move(surf), EdgeWalk{{0, 2}}, EdgeWalk{{4, 6}}, EdgeWalk{{10}});
    H1Space h(t.surface);
    F2Vector a = h.class_of(t.alpha), b = h.class_of(t.beta);
    if (!a.is_zero() || b.is_zero()) continue;
    if (!is_minimal_position(t.surface, t.alpha, t.beta).minimal) continue;
    return t;
  }
  throw Error("corpus: no sep variant worked");
}

CurveArcTriple g3_disjoint_bothsep() {
  SurfaceSpec spec;
  spec.rotation.resize(4);
  spec.rotation[0] = {0, 8, 3};
  spec.rotation[1] = {2, 10, 1};
  spec.rotation[2] = {4, 9, 7};
  spec.rotation[3] = {6, 11, 5};
  CombinatorialSurface bare = build_surface(spec);
  // fatten: alpha outer, beta outer, one middle quad
  int aface = -1, bface = -1, qface = -1;
  for (int f = 0; f < bare.face_count(); ++f) {
    bool only_a = true, only_b = true, has_c = false;
    for (int d : bare.face(f)) {
      if (edge_of(d) > 1) only_a = false;
      if (edge_of(d) < 2 || edge_of(d) > 3) only_b = false;
      if (edge_of(d) >= 4) has_c = true;
    }
    if (only_a) aface = f;
    if (only_b) bface = f;
    if (has_c && qface < 0) qface = f;
  }
  if (aface < 0 || bface < 0 || qface < 0) throw Error("corpus: bothsep face layout unexpected");
  spec.face_genus = {{bare.face(aface).front(), 1},
                     {bare.face(bface).front(), 1},
                     {bare.face(qface).front(), 1}};
  CombinatorialSurface surf = build_surface(spec);
  if (genus(surf) != 3) throw Error("corpus: bothsep genus unexpected");
  CurveArcTriple t =
      make_triple(std::move(surf), EdgeWalk{{0, 2}}, EdgeWalk{{4, 6}}, EdgeWalk{{8}});
  H1Space h(t.surface);
  if (!h.class_of(t.alpha).is_zero() || !h.class_of(t.beta).is_zero())
    throw Error("corpus: bothsep classes unexpected");
  if (has_alpha_beta_annulus(t)) throw Error("corpus: bothsep pair is isotopic");
  return checked(std::move(t), true, "g3-N0-bothsep");
}

CurveArcTriple punctured_torus_pair() {
  return search_overlay(2, 1, false,
                        [](const CurveArcTriple& t) {
                          if (t.surface.boundary_count() != 1) return false;
                          H1Space h(t.surface);
                          F2Vector a = h.class_of(t.alpha), b = h.class_of(t.beta);
                          return !a.is_zero() && a == b;
                        },
                        "punctured-torus", true);
}

CurveArcTriple pants_pair() {
  // circles: B1 (p1,q1), B2 (p2,q2), B3 (p3,q3), alpha (a0,a1), beta (b0,b1)
  // vertices: p1=0 q1=1 p2=2 q2=3 p3=4 q3=5 a0=6 a1=7 b0=8 b1=9
  // edges: r1=0 (p1->q1) s1=1 (q1->p1) r2=2 s2=3 r3=4 s3=5
  //        alpha1=6 (a0->a1) alpha2=7 (a1->a0) beta1=8 (b0->b1) beta2=9
  //        u1=10 (a0->p1) u2=11 (a1->q1) w1=12 (b0->p2) w2=13 (b1->q2)
  //        h3=14 (a0->b0) h4=15 (a1->p3)
  SurfaceSpec spec;
  spec.rotation.resize(10);
  spec.rotation[0] = {0, 21, 3};    // p1: r1+, u1-, s1-
  spec.rotation[1] = {2, 23, 1};    // q1: s1+, u2-, r1-
  spec.rotation[2] = {4, 25, 7};    // p2: r2+, w1-, s2-
  spec.rotation[3] = {6, 27, 5};    // q2: s2+, w2-, r2-
  spec.rotation[4] = {8, 31, 11};   // p3: r3+, h4-, s3-
  spec.rotation[5] = {10, 9};       // q3: s3+, r3-
  spec.rotation[6] = {12, 20, 15, 28};  // a0: alpha1+, u1+, alpha2-, h3+
  spec.rotation[7] = {14, 22, 13, 30};  // a1: alpha2+, u2+, alpha1-, h4+
  spec.rotation[8] = {16, 24, 19, 29};  // b0: beta1+, w1+, beta2-, h3-
  spec.rotation[9] = {18, 26, 17};      // b1: beta2+, w2+, beta1-
  CombinatorialSurface bare = build_surface(spec);
  // boundary discs: the faces supported on single boundary circles
  auto disc_face = [&](int redge, int sedge) {
    for (int f = 0; f < bare.face_count(); ++f) {
      bool ok = true;
      for (int d : bare.face(f))
        if (edge_of(d) != redge && edge_of(d) != sedge) ok = false;
      if (ok) return f;
    }
    return -1;
  };
  int d1 = disc_face(0, 1), d2 = disc_face(2, 3), d3 = disc_face(4, 5);
  if (d1 < 0 || d2 < 0 || d3 < 0) throw Error("corpus: pants boundary discs missing");
  spec.boundary_face_darts = {bare.face(d1).front(), bare.face(d2).front(),
                              bare.face(d3).front()};
  CombinatorialSurface surf = build_surface(spec);
  if (genus(surf) != 0 || surf.boundary_count() != 3 || euler_characteristic(surf) != -1)
    throw Error("corpus: pants shape unexpected");
  CurveArcTriple t =
      make_triple(std::move(surf), EdgeWalk{{12, 14}}, EdgeWalk{{16, 18}}, EdgeWalk{{28}});
  H1Space h(t.surface);
  F2Vector a = h.class_of(t.alpha), b = h.class_of(t.beta);
  if (a.is_zero() || b.is_zero() || a == b) throw Error("corpus: pants classes unexpected");
  return checked(std::move(t), true, "pants");
}

std::vector<NamedTriple> tower_corpus() {
  std::vector<NamedTriple> out;
  out.push_back({"g2-N0-diff", g2_disjoint_diff()});
  out.push_back({"g3-N0-bp", g3_disjoint_bp()});
  out.push_back({"g2-N0-sep", g2_disjoint_sep()});
  out.push_back({"g3-N0-bothsep", g3_disjoint_bothsep()});
  out.push_back({"g2-N1", g2_one_crossing()});
  out.push_back({"g2-N2-good", g2_two_crossings_good()});
  out.push_back({"g2-N2-bad", g2_two_crossings_bad()});
  out.push_back({"g2-N4", g2_four_crossings()});
  out.push_back({"g3-N6", g3_six_crossings()});
  return out;
}

std::vector<NamedTriple> bordered_corpus() {
  std::vector<NamedTriple> out;
  out.push_back({"punctured-torus", punctured_torus_pair()});
  out.push_back({"pants", pants_pair()});
  return out;
}

CurveArcTriple random_pair(uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 400; ++attempt) {
    int family = int(rng() % 8);
    try {
      if (family <= 3) {
        // crossing overlays with random order/signs
        int n = std::vector<int>{2, 2, 4, 4, 6}[rng() % 5];
        std::vector<int> order = {0};
        std::vector<int> tail;
        for (int i = 1; i < n; ++i) tail.push_back(i);
        std::shuffle(tail.begin(), tail.end(), rng);
        order.insert(order.end(), tail.begin(), tail.end());
        std::vector<char> signs;
        bool uniform = (rng() % 2) == 0;
        char first = char(rng() % 2);
        for (int i = 0; i < n; ++i) signs.push_back(uniform ? first : char(rng() % 2));
        OverlayParams p;
        p.n = n;
        p.beta_order = order;
        p.signs = signs;
        p.genus_target = 2 + int(rng() % 2);
        p.extra_face = int(rng() % std::size_t(3 * n)) - 1;
        auto t = build_overlay_pair(p);
        if (t) return std::move(*t);
      } else if (family == 4) {
        return g2_disjoint_diff();
      } else if (family == 5) {
        return g3_disjoint_bp();
      } else if (family == 6) {
        return g2_disjoint_sep();
      } else {
        return g3_disjoint_bothsep();
      }
    } catch (const Error&) {
    }
  }
  // deterministic fallback
  return g2_four_crossings();
}

}  // namespace covertower::corpus

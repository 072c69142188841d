#include "covertower/arcs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "covertower/surgery.hpp"

namespace covertower {

std::vector<BetaArc> beta_arcs(const CurveArcTriple& t) {
  long n = long(t.crossing_set.size());
  if (n == 0) throw Error("beta_arcs: disjoint curves (handle via the disjoint-curve lemmas)");
  std::size_t len = t.alpha.darts.size();
  std::vector<BetaArc> arcs;
  for (long i = 0; i < n; ++i) {
    const Crossing& from = t.crossing_set.points[std::size_t(i)];
    const Crossing& to = t.crossing_set.points[std::size_t((i + 1) % n)];
    BetaArc arc;
    arc.start_cross = int(i);
    arc.end_cross = int((i + 1) % n);
    arc.first_dart_index = from.alpha_pos;
    // darts from the start crossing up to the end crossing, exclusive
    for (std::size_t k = std::size_t(from.alpha_pos);
         int(k) != to.alpha_pos || arc.walk.darts.empty(); k = (k + 1) % len) {
      arc.walk.darts.push_back(t.alpha.darts[k]);
      if (arc.walk.darts.size() > len) throw Error("beta_arcs: arc did not close");
    }
    arcs.push_back(std::move(arc));
  }
  // arcs tile alpha
  std::size_t total = 0;
  for (const auto& a : arcs) total += a.walk.darts.size();
  if (total != len) throw Error("beta_arcs: arcs do not tile alpha");
  return arcs;
}

std::vector<BetaArc> select_disjoint(const CurveArcTriple& t, const std::vector<BetaArc>& arcs) {
  long n = long(arcs.size());
  if (n % 2 != 0)
    throw Error("select_disjoint: odd crossing count (classes differ; no alternating set)");
  std::vector<BetaArc> out;
  for (long i = 0; i < n; i += 2) out.push_back(arcs[std::size_t(i)]);
  // disjointness: no shared vertices, endpoints included
  std::set<int> seen;
  for (const auto& a : out) {
    for (int i = 0; i <= a.walk.length(); ++i) {
      int v = i < a.walk.length() ? a.walk.vertex_at(t.surface, i) : a.walk.target(t.surface);
      if (!seen.insert(v).second) throw Error("select_disjoint: arcs share a vertex");
    }
  }
  return out;
}

ArcContext make_arc_context(const CurveArcTriple& t) {
  H1Space h(t.surface);
  F2Vector beta_cls = h.class_of(t.beta);
  if (beta_cls.is_zero())
    throw Error("arc context: [beta] = 0 (the relative-class machinery needs a nonzero class)");
  return ArcContext(std::move(h), std::move(beta_cls));
}

EdgeWalk eta_forward(const CurveArcTriple& t, const BetaArc& arc) {
  const Crossing& from = t.crossing_set.points[std::size_t(arc.end_cross)];
  const Crossing& to = t.crossing_set.points[std::size_t(arc.start_cross)];
  std::size_t len = t.beta.darts.size();
  EdgeWalk out;
  for (std::size_t k = std::size_t(from.beta_pos); int(k) != to.beta_pos || out.darts.empty();
       k = (k + 1) % len) {
    out.darts.push_back(t.beta.darts[k]);
    if (out.darts.size() > len) throw Error("eta: arc did not close");
  }
  return out;
}

EdgeWalk eta_backward(const CurveArcTriple& t, const BetaArc& arc) {
  const Crossing& from = t.crossing_set.points[std::size_t(arc.start_cross)];
  const Crossing& to = t.crossing_set.points[std::size_t(arc.end_cross)];
  std::size_t len = t.beta.darts.size();
  EdgeWalk fwd;
  for (std::size_t k = std::size_t(from.beta_pos); int(k) != to.beta_pos || fwd.darts.empty();
       k = (k + 1) % len) {
    fwd.darts.push_back(t.beta.darts[k]);
    if (fwd.darts.size() > len) throw Error("eta: arc did not close");
  }
  return fwd.reversed();
}

F2Vector relative_class(const CurveArcTriple& t, const ArcContext& ctx, const BetaArc& arc) {
  EdgeWalk closed = concatenate(t.surface, arc.walk, eta_forward(t, arc));
  F2Vector cls = ctx.x.project(ctx.h1.class_of(closed));
  return cls;
}

long ArcSet::good_count() const {
  long c = 0;
  for (char g : good)
    if (g) ++c;
  return c;
}

ArcSet classify_arcs(const CurveArcTriple& t, const ArcContext& ctx, std::vector<BetaArc> arcs) {
  ArcSet out;
  out.good.reserve(arcs.size());
  for (const auto& a : arcs) out.good.push_back(!relative_class(t, ctx, a).is_zero());
  out.arcs = std::move(arcs);
  return out;
}

SeparatingPairing make_separating_pairing(const CurveArcTriple& t, const ArcContext& ctx,
                                          const BetaArc& mu) {
  EdgeWalk ef = eta_forward(t, mu);
  EdgeWalk eb = eta_backward(t, mu);
  F2Vector cf = ctx.h1.class_of(concatenate(t.surface, mu.walk, ef));
  F2Vector cb = ctx.h1.class_of(concatenate(t.surface, mu.walk, eb));
  if ((cf ^ cb) != ctx.beta_class)
    throw Error("pairing: the two closures do not differ by [beta]");
  EdgeWalk eta;
  if (cf.is_zero()) eta = ef;
  else if (cb.is_zero()) eta = eb;
  else
    throw Error(
        "pairing: both closures have nonzero class (kernel fact violated: the arc is good or "
        "[beta] = 0 upstream)");

  const Crossing& cs = t.crossing_set.points[std::size_t(mu.start_cross)];
  const Crossing& ce = t.crossing_set.points[std::size_t(mu.end_cross)];
  if (cs.sign == ce.sign)
    throw Error("pairing: same-sign crossings at the arc endpoints (nullhomologous closure "
                "impossible for a transverse minimal pair)");

  SeparatingPairing out;
  out.eta = eta;
  out.cycle = concatenate(t.surface, mu.walk, eta);
  if (!is_simple_closed(t.surface, out.cycle)) throw Error("pairing: closure is not embedded");

  // beta marker: a beta edge off the cycle
  std::set<int> cycle_edges;
  for (int d : out.cycle.darts) cycle_edges.insert(edge_of(d));
  int marker = -1;
  for (int d : t.beta.darts)
    if (!cycle_edges.count(edge_of(d))) {
      marker = edge_of(d);
      break;
    }
  if (marker < 0) throw Error("pairing: beta lies entirely on the cycle");

  CutResult cut = cut_along(t.surface, out.cycle, marker);
  if (euler_characteristic(cut.side_s.surface) == 1 ||
      euler_characteristic(cut.side_sprime.surface) == 1)
    throw Error("pairing: nullhomotopic closure (a side is a disc; the pair is not in minimal "
                "position)");

  // every beta edge off the cycle sits on the beta side
  std::set<int> side_s_edges;
  for (int d : cut.side_s.dart_to_old) side_s_edges.insert(edge_of(d));
  for (int d : t.beta.darts)
    if (!cycle_edges.count(edge_of(d)) && side_s_edges.count(edge_of(d)))
      throw Error("pairing: beta edge on the wrong side of the cut");

  out.genus_away = genus(cut.side_s.surface);
  out.genus_beta = genus(cut.side_sprime.surface);

  auto side_image = [&](const CutPiece& piece) {
    std::vector<F2Vector> img;
    H1Space hs(piece.surface);
    for (std::size_t i = 0; i < hs.dim(); ++i) {
      EdgeWalk w = piece.to_old(hs.basis_walk(i));
      img.push_back(ctx.h1.class_of(w));
    }
    return img;
  };
  std::vector<F2Vector> im_s = side_image(cut.side_s);
  std::vector<F2Vector> im_sp = side_image(cut.side_sprime);

  // [beta] lies in the image of the beta side
  F2Matrix span_sp(ctx.h1.dim());
  for (const auto& v : im_sp) span_sp.add_row(v);
  if (!span_sp.in_span(ctx.beta_class))
    throw Error("pairing: [beta] not in the beta-side image");

  F2Matrix vspan(ctx.x.dim()), wspan(ctx.x.dim()), all(ctx.x.dim());
  for (const auto& v : im_s) {
    F2Vector p = ctx.x.project(v);
    if (vspan.add_row(p)) out.v_basis.push_back(p);
    all.add_row(p);
  }
  for (const auto& v : im_sp) {
    F2Vector p = ctx.x.project(v);
    if (wspan.add_row(p)) out.w_basis.push_back(p);
    all.add_row(p);
  }
  if (vspan.rank() + wspan.rank() != ctx.x.dim() || all.rank() != ctx.x.dim())
    throw Error("pairing: X does not split as V + W");
  return out;
}

ArcFateReport arc_fates(const CurveArcTriple& base_t, const CurveArcTriple& lifted_t,
                        const ArcSet& a0,
                        const std::vector<std::optional<SeparatingPairing>>& pairings,
                        const F2Vector& phi_on_x) {
  if (pairings.size() != a0.arcs.size()) throw Error("arc_fates: pairing list size mismatch");
  ArcFateReport rep;
  rep.b1_count = long(a0.arcs.size());
  rep.a0_good = a0.good_count();
  rep.a0_bad = a0.bad_count();

  // surviving crossings, by position along alpha (lift preserves indexing)
  std::set<int> surviving;
  for (const auto& c : lifted_t.crossing_set.points) surviving.insert(c.alpha_pos);
  std::map<int, int> lifted_index;  // alpha_pos -> index in lifted crossing set
  for (std::size_t i = 0; i < lifted_t.crossing_set.points.size(); ++i)
    lifted_index[lifted_t.crossing_set.points[i].alpha_pos] = int(i);

  ArcContext lifted_ctx = make_arc_context(lifted_t);

  std::vector<BetaArc> lifted_arcs;
  std::vector<std::size_t> lifted_origin;
  for (std::size_t i = 0; i < a0.arcs.size(); ++i) {
    const BetaArc& arc = a0.arcs[i];
    int sp = base_t.crossing_set.points[std::size_t(arc.start_cross)].alpha_pos;
    int ep = base_t.crossing_set.points[std::size_t(arc.end_cross)].alpha_pos;
    bool lives = surviving.count(sp) && surviving.count(ep);
    if (!lives) {
      ++rep.r;
      (a0.good[i] ? rep.r_g : rep.r_b)++;
      continue;
    }
    BetaArc la;
    la.first_dart_index = arc.first_dart_index;
    la.start_cross = lifted_index.at(sp);
    la.end_cross = lifted_index.at(ep);
    std::size_t len = lifted_t.alpha.darts.size();
    for (int k = 0; k < arc.walk.length(); ++k)
      la.walk.darts.push_back(lifted_t.alpha.darts[(std::size_t(arc.first_dart_index) + std::size_t(k)) % len]);
    lifted_arcs.push_back(std::move(la));
    lifted_origin.push_back(i);
  }

  rep.lifted_set = classify_arcs(lifted_t, lifted_ctx, std::move(lifted_arcs));
  rep.a1_good = rep.lifted_set.good_count();
  rep.a1_bad = rep.lifted_set.bad_count();

  for (std::size_t i = 0; i < a0.arcs.size(); ++i) {
    if (a0.good[i] || !pairings[i]) continue;
    const SeparatingPairing& p = *pairings[i];
    SplittingFamily::Pair pr{p.v_basis, p.w_basis};
    if (!splitting_hit(phi_on_x, pr)) continue;
    ++rep.hit_count;
    // certified good upstairs when the lift is still a beta-arc
    for (std::size_t j = 0; j < lifted_origin.size(); ++j) {
      if (lifted_origin[j] != i) continue;
      if (!rep.lifted_set.good[j])
        throw Error("arc_fates: lifted bad arc with split-hitting functional is not good "
                    "(badarcresolve mechanism violated)");
      ++rep.c_count;
    }
  }
  if (rep.r != rep.r_g + rep.r_b) throw Error("arc_fates: r bookkeeping broken");
  return rep;
}

}  // namespace covertower

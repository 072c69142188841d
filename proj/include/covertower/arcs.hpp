#pragma once

#include "covertower/covering.hpp"
#include "covertower/curves.hpp"
#include "covertower/functional_search.hpp"
#include "covertower/homology.hpp"

namespace covertower {

/// Subarc of alpha between consecutive crossings; endpoints lie on beta and
/// the interior misses it.
struct BetaArc {
  EdgeWalk walk;
  int start_cross;      // index into the triple's crossing set
  int end_cross;
  int first_dart_index;  // position of walk.darts.front() within alpha
};

/// The N crossings cut alpha into N arcs, ordered along alpha.
/// Throws when the curves are disjoint.
std::vector<BetaArc> beta_arcs(const CurveArcTriple& t);

/// Alternating arcs starting from the earliest crossing along alpha:
/// N/2 pairwise disjoint arcs (endpoints included). Requires N even.
std::vector<BetaArc> select_disjoint(const CurveArcTriple& t, const std::vector<BetaArc>& arcs);

/// Homology data shared by the arc operations; requires [beta] != 0.
struct ArcContext {
  H1Space h1;
  F2Vector beta_class;
  QuotientSpace x;  // H1 / <[beta]>

  ArcContext(H1Space h, F2Vector beta_cls)
      : h1(std::move(h)), beta_class(std::move(beta_cls)), x(h1, {beta_class}) {}
};
ArcContext make_arc_context(const CurveArcTriple& t);

/// The two closures of an arc: along beta forward, or backward.
EdgeWalk eta_forward(const CurveArcTriple& t, const BetaArc& arc);
EdgeWalk eta_backward(const CurveArcTriple& t, const BetaArc& arc);

/// Class of mu.eta in X; independent of the eta choice.
F2Vector relative_class(const CurveArcTriple& t, const ArcContext& ctx, const BetaArc& arc);

struct ArcSet {
  std::vector<BetaArc> arcs;
  std::vector<char> good;

  long good_count() const;
  long bad_count() const { return long(arcs.size()) - good_count(); }
};
ArcSet classify_arcs(const CurveArcTriple& t, const ArcContext& ctx, std::vector<BetaArc> arcs);

/// A bad arc closed into a separating cycle, cut, with the induced
/// splitting of X.
struct SeparatingPairing {
  EdgeWalk eta;
  EdgeWalk cycle;  // mu . eta, simple closed, nullhomologous
  int genus_away = 0;   // side S not carrying beta
  int genus_beta = 0;   // side S' carrying beta
  std::vector<F2Vector> v_basis;  // projection of H1(S) to X
  std::vector<F2Vector> w_basis;  // projection of H1(S') to X
};

SeparatingPairing make_separating_pairing(const CurveArcTriple& t, const ArcContext& ctx,
                                          const BetaArc& mu);

/// Bookkeeping of arc lifts through a closed-lift cover: which arcs stay
/// beta-arcs, how many intersections were resolved, and which lifted bad
/// arcs are certified good.
struct ArcFateReport {
  long b1_count = 0;  // lifted arcs
  long r = 0, r_g = 0, r_b = 0;
  long hit_count = 0;   // splittings where phi is nontrivial on both sides
  long c_count = 0;     // certified-good lifted bad arcs
  long a0_good = 0, a0_bad = 0;
  long a1_good = 0, a1_bad = 0;
  ArcSet lifted_set;  // arcs of the lifted triple, classified
};

ArcFateReport arc_fates(const CurveArcTriple& base_t, const CurveArcTriple& lifted_t,
                        const ArcSet& a0,
                        const std::vector<std::optional<SeparatingPairing>>& pairings,
                        const F2Vector& phi_on_x);

}  // namespace covertower

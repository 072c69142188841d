#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "covertower/curves.hpp"

namespace covertower::corpus {

/// Two transverse circles with n crossings: alpha visits crossings 0..n-1 in
/// order, beta visits them in beta_order; signs fix the local interleaving.
/// Curve edges are subdivided so basepoints and handles avoid crossings;
/// complementary faces are capped with genus to reach the target and to kill
/// bigons (except one when keep_one_bigon is set).
struct OverlayParams {
  int n = 2;
  std::vector<int> beta_order;   // permutation of 0..n-1
  std::vector<char> signs;       // size n
  int genus_target = 2;
  bool keep_one_bigon = false;
  int extra_face = -1;           // face receiving leftover genus (-1: first fattened)
  bool puncture_instead = false;  // mark one face as boundary instead of capping
};

std::optional<CurveArcTriple> build_overlay_pair(const OverlayParams& p);

/// First parameter assignment (beta orders, signs, extra-face placement)
/// whose build satisfies the predicate. Deterministic order.
CurveArcTriple search_overlay(int n, int genus_target, bool keep_one_bigon,
                              const std::function<bool(const CurveArcTriple&)>& pred,
                              const std::string& what, bool puncture = false);

struct NamedTriple {
  std::string name;
  CurveArcTriple triple;
};

// bundled corpus
CurveArcTriple g2_one_crossing();         // N=1, classes forced distinct
CurveArcTriple g2_two_crossings_good();   // N=2, [a]=[b]!=0, selected arc good
CurveArcTriple g2_two_crossings_bad();    // N=2, [a]=[b]!=0, selected arc bad
CurveArcTriple g2_four_crossings();       // N=4, [a]=[b]!=0
CurveArcTriple g3_six_crossings();        // N=6, [a]=[b]!=0
CurveArcTriple g2_same_sign_pair();       // N=2, same-sign crossings (all arcs good)
CurveArcTriple g2_wiggle();               // N=4 with one bigon; reduces to N=2
CurveArcTriple g2_disjoint_diff();        // N=0, [a]!=[b], both nonzero
CurveArcTriple g3_disjoint_bp();          // N=0, [a]=[b]!=0, nonisotopic
CurveArcTriple g2_disjoint_sep();         // N=0, [a]=0, [b]!=0
CurveArcTriple g3_disjoint_bothsep();     // N=0, [a]=[b]=0, nonisotopic
CurveArcTriple punctured_torus_pair();    // bordered: genus 1, b=1, N=2
CurveArcTriple pants_pair();              // bordered: genus 0, b=3, N=0

/// The bundled tower corpus (closed surfaces only).
std::vector<NamedTriple> tower_corpus();
/// The bordered examples for the doubling pipeline.
std::vector<NamedTriple> bordered_corpus();

/// Deterministic randomized pair for soundness sweeps: mixes crossing
/// patterns (torus strides and searched sign patterns) with the disjoint
/// families, on genus 2-3.
CurveArcTriple random_pair(uint64_t seed);

}  // namespace covertower::corpus

#include "covertower/covering.hpp"

#include <functional>
#include <numeric>

namespace covertower {

DoubleCover::DoubleCover(const CombinatorialSurface& base, Cocycle psi)
    : psi_(std::move(psi)), base_vertices_(base.vertex_count()), base_darts_(base.dart_count()) {
  if (int(psi_.edge_bits.dim()) != base.edge_count())
    throw Error("cover: cocycle dimension mismatch");
  SurfaceSpec spec;
  spec.rotation.resize(std::size_t(2 * base_vertices_));
  for (int v = 0; v < base_vertices_; ++v) {
    for (int sheet = 0; sheet < 2; ++sheet) {
      auto& r = spec.rotation[std::size_t(lift_vertex(v, sheet))];
      for (int d : base.rotation(v)) r.push_back(lift_dart(d, sheet));
    }
  }
  for (int f = 0; f < base.face_count(); ++f)
    if (base.face_is_boundary(f)) {
      int d = base.face(f).front();
      spec.boundary_face_darts.push_back(lift_dart(d, 0));
      spec.boundary_face_darts.push_back(lift_dart(d, 1));
    }
  total_ = build_surface(spec);
}

int DoubleCover::lift_dart(int d, int sheet) const {
  int e = edge_of(d);
  bool voltage = psi_.value_on_edge(e);
  if ((d & 1) == 0) return 4 * e + 2 * sheet;
  int t = sheet ^ int(voltage);  // forward dart's origin sheet
  return 4 * e + 2 * t + 1;
}

int DoubleCover::project_dart(int lifted) const { return 2 * (lifted >> 2) + (lifted & 1); }

std::pair<EdgeWalk, int> DoubleCover::lift_walk(const EdgeWalk& w, int start_sheet) const {
  EdgeWalk out;
  out.darts.reserve(w.darts.size());
  int sheet = start_sheet;
  for (int d : w.darts) {
    out.darts.push_back(lift_dart(d, sheet));
    sheet ^= int(psi_.value_on_dart(d));
  }
  return {out, sheet};
}

EdgeWalk DoubleCover::project_walk(const EdgeWalk& w) const {
  EdgeWalk out;
  out.darts.reserve(w.darts.size());
  for (int d : w.darts) out.darts.push_back(project_dart(d));
  return out;
}

bool lifted_graph_connected(const CombinatorialSurface& base, const Cocycle& psi) {
  int n = base.vertex_count();
  std::vector<int> parent(std::size_t(2 * n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[std::size_t(x)] != x) x = parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
    return x;
  };
  for (int e = 0; e < base.edge_count(); ++e) {
    int d = forward_dart(e);
    int u = base.dart_origin(d), v = base.dart_target(d);
    int volt = int(psi.value_on_edge(e));
    for (int s = 0; s < 2; ++s) {
      int a = u + s * n, b = v + (s ^ volt) * n;
      parent[std::size_t(find(a))] = find(b);
    }
  }
  int root = find(0);
  for (int x = 0; x < 2 * n; ++x)
    if (find(x) != root) return false;
  return true;
}

DoubleCover build_double_cover(const CombinatorialSurface& base, const Cocycle& psi) {
  if (!cocycle_face_condition(base, psi))
    throw Error("cover: cocycle violates the face condition");
  H1Space h(base);
  if (cocycle_class(h, psi).is_zero())
    throw Error("cover: coboundary cocycle gives a disconnected cover");
  DoubleCover c(base, psi);
  if (!c.total().connected()) throw Error("cover: total space disconnected");
  if (euler_characteristic(c.total()) != 2 * euler_characteristic(base))
    throw Error("cover: Euler characteristic did not double");
  for (int d = 0; d < c.total().dart_count(); ++d) {
    if (c.deck_dart(c.deck_dart(d)) != d || c.deck_dart(d) == d)
      throw Error("cover: deck transformation is not a free involution");
    if (c.project_dart(c.deck_dart(d)) != c.project_dart(d))
      throw Error("cover: deck does not commute with projection");
  }
  return c;
}

const char* to_string(LiftKind k) {
  switch (k) {
    case LiftKind::Closed: return "closed";
    case LiftKind::PartiallyClosed: return "partially-closed";
    case LiftKind::Nonclosed: return "nonclosed";
  }
  return "?";
}

LiftClassification classify_lift(const Cocycle& psi, const CurveArcTriple& t) {
  bool a_closed = !psi.evaluate(t.alpha);
  bool b_closed = !psi.evaluate(t.beta);
  LiftKind kind = a_closed && b_closed
                      ? LiftKind::Closed
                      : (!a_closed && !b_closed ? LiftKind::Nonclosed : LiftKind::PartiallyClosed);
  return LiftClassification{kind, a_closed, b_closed};
}

TripleLift lift_triple(const DoubleCover& c, const CurveArcTriple& t) {
  TripleLift out;
  out.classification = classify_lift(c.cocycle(), t);
  if (out.classification.kind != LiftKind::Closed) return out;
  auto [alpha1, sa] = c.lift_walk(t.alpha, 0);
  if (sa != 0) throw Error("lift: alpha classification inconsistent");
  auto [tau1, sheet_w] = c.lift_walk(t.tau, 0);
  auto [beta1, sb] = c.lift_walk(t.beta, sheet_w);
  if (sb != sheet_w) throw Error("lift: beta classification inconsistent");
  out.lifted = make_triple(c.total(), std::move(alpha1), std::move(beta1), std::move(tau1));
  // crossing sets inject: lifted crossings sit over base crossings, at the
  // same positions along alpha
  for (const auto& cr : out.lifted->crossing_set.points) {
    if (!t.crossing_set.contains_vertex(c.project_vertex(cr.vertex)))
      throw Error("lift: lifted crossing not over a base crossing");
  }
  if (out.lifted->crossing_set.size() > t.crossing_set.size())
    throw Error("lift: crossing count increased in the cover");
  return out;
}

const CurveArcTriple& Tower::triple_at(int level) const {
  if (level == 0) return base;
  const auto& t = levels[std::size_t(level - 1)].triple;
  if (!t) throw Error("tower: no closed triple at this level");
  return *t;
}

const CombinatorialSurface& Tower::surface_at(int level) const {
  if (level == 0) return base.surface;
  return levels[std::size_t(level - 1)].cover.total();
}

bool Monodromy::transitive() const {
  std::size_t n = fiber_size();
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& p : permutations) {
      int y = p[std::size_t(x)];
      if (!seen[std::size_t(y)]) {
        seen[std::size_t(y)] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

int tower_transport(const Tower& tw, const EdgeWalk& loop, int fiber_point) {
  EdgeWalk cur = loop;
  int out = 0;
  for (int i = 0; i < tw.k(); ++i) {
    int sheet = (fiber_point >> i) & 1;
    auto [lifted, end_sheet] = tw.levels[std::size_t(i)].cover.lift_walk(cur, sheet);
    out |= end_sheet << i;
    cur = std::move(lifted);
  }
  return out;
}

std::vector<int> tower_permutation(const Tower& tw, const EdgeWalk& loop) {
  std::size_t n = std::size_t(1) << tw.k();
  std::vector<int> perm(n);
  for (std::size_t x = 0; x < n; ++x) perm[x] = tower_transport(tw, loop, int(x));
  return perm;
}

Monodromy monodromy(const Tower& tw) {
  H1Space h(tw.base.surface, tw.base.v());
  std::vector<EdgeWalk> gens;
  for (std::size_t i = 0; i < h.nontree_count(); ++i) gens.push_back(h.fundamental_cycle(i));
  return monodromy(tw, gens);
}

Monodromy monodromy(const Tower& tw, const std::vector<EdgeWalk>& generators) {
  Monodromy m;
  m.k = tw.k();
  m.generators = generators;
  for (const auto& g : generators) {
    if (!g.is_closed(tw.base.surface) || g.origin(tw.base.surface) != tw.base.v())
      throw Error("monodromy: generator is not a loop at the basepoint");
    m.permutations.push_back(tower_permutation(tw, g));
  }
  return m;
}

}  // namespace covertower

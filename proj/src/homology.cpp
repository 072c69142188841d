#include "covertower/homology.hpp"

#include <algorithm>
#include <deque>

namespace covertower {

H1Space::H1Space(const CombinatorialSurface& s, int root) : surface_(&s), root_(root) {
  int nv = s.vertex_count(), ne = s.edge_count();
  parent_dart_.assign(std::size_t(nv), -1);
  edge_in_tree_.assign(std::size_t(ne), 0);
  std::vector<char> seen(std::size_t(nv), 0);
  std::deque<int> queue = {root};
  seen[std::size_t(root)] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int d : s.rotation(v)) {
      int u = s.dart_target(d);
      if (!seen[std::size_t(u)]) {
        seen[std::size_t(u)] = 1;
        parent_dart_[std::size_t(u)] = d;
        edge_in_tree_[std::size_t(edge_of(d))] = 1;
        queue.push_back(u);
      }
    }
  }
  nontree_index_.assign(std::size_t(ne), -1);
  for (int e = 0; e < ne; ++e)
    if (!edge_in_tree_[std::size_t(e)]) {
      nontree_index_[std::size_t(e)] = int(nontree_edges_.size());
      nontree_edges_.push_back(e);
    }

  // face relations in cycle coordinates (filled faces only; boundary faces
  // impose no relation)
  relations_ = F2Matrix(nontree_edges_.size());
  for (int f = 0; f < s.face_count(); ++f) {
    if (s.face_is_boundary(f)) continue;
    F2Vector row(nontree_edges_.size());
    for (int d : s.face(f)) {
      int idx = nontree_index_[std::size_t(edge_of(d))];
      if (idx >= 0) row.flip(std::size_t(idx));
    }
    relations_.add_row(std::move(row));
  }
  std::vector<char> pivot(nontree_edges_.size(), 0);
  for (int p : relations_.pivots()) pivot[std::size_t(p)] = 1;
  for (std::size_t j = 0; j < nontree_edges_.size(); ++j)
    if (!pivot[j]) coord_positions_.push_back(int(j));
}

F2Vector H1Space::chain_of(const EdgeWalk& w) const {
  F2Vector v(nontree_edges_.size());
  for (int d : w.darts) {
    int idx = nontree_index_[std::size_t(edge_of(d))];
    if (idx >= 0) v.flip(std::size_t(idx));
  }
  return v;
}

F2Vector H1Space::class_of(const EdgeWalk& w) const {
  check_walk(*surface_, w, "class_of");
  if (!w.is_closed(*surface_)) throw Error("class_of: open walk");
  return class_of_cycle_vector(chain_of(w));
}

F2Vector H1Space::class_of_cycle_vector(F2Vector cycle) const {
  cycle = relations_.reduce(std::move(cycle));
  F2Vector out(coord_positions_.size());
  for (std::size_t i = 0; i < coord_positions_.size(); ++i)
    if (cycle.get(std::size_t(coord_positions_[i]))) out.set(i, true);
  return out;
}

EdgeWalk H1Space::tree_path_from_root(int v) const {
  std::vector<int> rev;
  while (v != root_) {
    int d = parent_dart_[std::size_t(v)];
    if (d < 0) throw Error("tree_path: vertex unreachable");
    rev.push_back(d);
    v = surface_->dart_origin(d);
  }
  std::reverse(rev.begin(), rev.end());
  return EdgeWalk{std::move(rev)};
}

EdgeWalk H1Space::fundamental_cycle(std::size_t nontree_index) const {
  int e = nontree_edges_[nontree_index];
  int d = forward_dart(e);
  EdgeWalk to_tail = tree_path_from_root(surface_->dart_origin(d));
  EdgeWalk from_head = tree_path_from_root(surface_->dart_target(d)).reversed();
  EdgeWalk loop;
  loop.darts = to_tail.darts;
  loop.darts.push_back(d);
  loop.darts.insert(loop.darts.end(), from_head.darts.begin(), from_head.darts.end());
  return loop;
}

EdgeWalk H1Space::basis_walk(std::size_t i) const {
  return fundamental_cycle(std::size_t(coord_positions_[i]));
}

void H1Space::build_gram() const {
  if (!gram_.empty() || dim() == 0) return;
  std::vector<EdgeWalk> reps;
  for (std::size_t i = 0; i < dim(); ++i) reps.push_back(basis_walk(i));
  gram_.assign(dim(), F2Vector(dim()));
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (pairing_of_walks(*surface_, reps[i], reps[j])) gram_[i].set(j, true);
}

bool H1Space::pairing(const F2Vector& x, const F2Vector& y) const {
  build_gram();
  bool acc = false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (x.get(i) && gram_[i].dot(y)) acc = !acc;
  return acc;
}

namespace {

// darts strictly between `from` and `to` in counterclockwise rotation order
// at their common vertex (empty when to immediately follows from)
std::vector<int> ccw_open_interval(const CombinatorialSurface& s, int from, int to) {
  std::vector<int> out;
  int d = s.rotation_next(from);
  while (d != to) {
    out.push_back(d);
    d = s.rotation_next(d);
    if (int(out.size()) > s.dart_count()) throw Error("rotation interval did not close");
  }
  return out;
}

}  // namespace

bool pairing_of_walks(const CombinatorialSurface& s, const EdgeWalk& z, const EdgeWalk& w) {
  if (!z.is_closed(s) || !w.is_closed(s)) throw Error("pairing_of_walks: walks must be closed");
  // per-vertex tally of w's outgoing strand darts
  std::vector<int> w_dart_count(std::size_t(s.dart_count()), 0);
  std::size_t wn = w.darts.size();
  for (std::size_t i = 0; i < wn; ++i) {
    int in = w.darts[(i + wn - 1) % wn];
    int out = w.darts[i];
    ++w_dart_count[std::size_t(twin(in))];
    ++w_dart_count[std::size_t(out)];
  }
  // the left push-off of z sweeps, at each passage (in, out), the darts
  // counterclockwise strictly between out and twin(in)
  long total = 0;
  std::size_t zn = z.darts.size();
  for (std::size_t i = 0; i < zn; ++i) {
    int in = z.darts[(i + zn - 1) % zn];
    int out = z.darts[i];
    for (int x : ccw_open_interval(s, out, twin(in))) total += w_dart_count[std::size_t(x)];
  }
  // each crossing of the push-off with w touches one strand dart; a strand
  // through a swept dart is counted once per side, so halve by parity of
  // dart incidences: every geometric crossing contributes exactly one
  // (dart, passage) incidence here
  return (total % 2) != 0;
}

bool Cocycle::evaluate(const EdgeWalk& w) const {
  bool acc = false;
  for (int d : w.darts) acc ^= value_on_dart(d);
  return acc;
}

bool cocycle_face_condition(const CombinatorialSurface& s, const Cocycle& psi) {
  for (int f = 0; f < s.face_count(); ++f) {
    if (s.face_is_boundary(f)) continue;
    bool acc = false;
    for (int d : s.face(f)) acc ^= psi.value_on_dart(d);
    if (acc) return false;
  }
  return true;
}

F2Vector cocycle_class(const H1Space& h, const Cocycle& psi) {
  F2Vector out(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    if (psi.evaluate(h.basis_walk(i))) out.set(i, true);
  return out;
}

Cocycle cocycle_from_functional(const H1Space& h, const F2Vector& phi) {
  if (phi.dim() != h.dim()) throw Error("cocycle_from_functional: functional dimension mismatch");
  Cocycle psi;
  psi.edge_bits = F2Vector(std::size_t(h.surface().edge_count()));
  for (std::size_t i = 0; i < h.nontree_count(); ++i) {
    F2Vector cls = h.class_of_cycle_vector(F2Vector::unit(h.cycle_dim(), i));
    if (phi.dot(cls)) psi.edge_bits.set(std::size_t(h.nontree_edge(i)), true);
  }
  return psi;
}

QuotientSpace::QuotientSpace(const H1Space& h, const std::vector<F2Vector>& killed) : h_(&h) {
  killed_ = F2Matrix(h.dim());
  for (const auto& v : killed) {
    if (v.is_zero())
      throw Error("quotient: killed vector is zero (nonzero class required before quotienting)");
    if (!killed_.add_row(v)) throw Error("quotient: killed vectors are dependent");
  }
  std::vector<char> pivot(h.dim(), 0);
  for (int p : killed_.pivots()) pivot[std::size_t(p)] = 1;
  for (std::size_t j = 0; j < h.dim(); ++j)
    if (!pivot[j]) free_positions_.push_back(int(j));
}

F2Vector QuotientSpace::project(const F2Vector& h1class) const {
  F2Vector r = killed_.reduce(h1class);
  F2Vector out(free_positions_.size());
  for (std::size_t i = 0; i < free_positions_.size(); ++i)
    if (r.get(std::size_t(free_positions_[i]))) out.set(i, true);
  return out;
}

F2Vector QuotientSpace::lift_functional(const F2Vector& phi_on_x) const {
  if (phi_on_x.dim() != dim()) throw Error("lift_functional: dimension mismatch");
  F2Vector out(h_->dim());
  for (std::size_t i = 0; i < h_->dim(); ++i)
    if (phi_on_x.dot(project(F2Vector::unit(h_->dim(), i)))) out.set(i, true);
  return out;
}

FunctionalEnumerator::FunctionalEnumerator(std::size_t dim, bool nonzero_only,
                                           std::vector<FunctionalConstraint> constraints,
                                           std::size_t cap_dim)
    : dim_(dim), nonzero_only_(nonzero_only) {
  if (dim > cap_dim)
    throw Error("functional enumeration cap exceeded (dim " + std::to_string(dim) + " > cap " +
                std::to_string(cap_dim) + ")");
  // solve the affine system f . v_i = b_i over the coefficients of f
  F2Matrix aug(dim + 1);
  for (const auto& c : constraints) {
    if (c.vec.dim() != dim) throw Error("functional constraint dimension mismatch");
    F2Vector row(dim + 1);
    for (std::size_t j = 0; j < dim; ++j)
      if (c.vec.get(j)) row.set(j, true);
    row.set(dim, c.value);
    aug.add_row(std::move(row));
  }
  for (std::size_t i = 0; i < aug.rank(); ++i)
    if (aug.pivots()[i] == int(dim)) {
      empty_ = true;  // inconsistent constraints: empty stream
      return;
    }
  particular_ = F2Vector(dim);
  for (std::size_t i = 0; i < aug.rank(); ++i)
    if (aug.rows()[i].get(dim)) particular_.set(std::size_t(aug.pivots()[i]), true);
  // homogeneous solutions: nullspace of the constraint rows (without the
  // augmented column)
  F2Matrix homo(dim);
  for (const auto& c : constraints) homo.add_row(c.vec);
  homogeneous_ = homo.nullspace();
}

std::optional<F2Vector> FunctionalEnumerator::next() {
  if (empty_) return std::nullopt;
  while (true) {
    if (counter_ >= (uint64_t(1) << homogeneous_.size())) return std::nullopt;
    F2Vector f = particular_;
    for (std::size_t j = 0; j < homogeneous_.size(); ++j)
      if ((counter_ >> j) & 1) f ^= homogeneous_[j];
    ++counter_;
    if (nonzero_only_ && f.is_zero()) continue;
    return f;
  }
}

std::vector<F2Vector> FunctionalEnumerator::collect() {
  std::vector<F2Vector> out;
  while (auto f = next()) out.push_back(*f);
  return out;
}

}  // namespace covertower

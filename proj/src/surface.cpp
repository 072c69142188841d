#include "covertower/surface.hpp"

#include <algorithm>
#include <numeric>

namespace covertower {

int CombinatorialSurface::rotation_next(int d) const {
  const auto& rot = rotation_[std::size_t(dart_vertex_[std::size_t(d)])];
  std::size_t i = std::size_t(dart_slot_[std::size_t(d)]);
  return rot[(i + 1) % rot.size()];
}

int CombinatorialSurface::rotation_prev(int d) const {
  const auto& rot = rotation_[std::size_t(dart_vertex_[std::size_t(d)])];
  std::size_t i = std::size_t(dart_slot_[std::size_t(d)]);
  return rot[(i + rot.size() - 1) % rot.size()];
}

int CombinatorialSurface::filled_face_count() const {
  int n = 0;
  for (std::size_t f = 0; f < faces_.size(); ++f)
    if (!boundary_face_[f]) ++n;
  return n;
}

int CombinatorialSurface::boundary_count() const {
  int n = 0;
  for (char b : boundary_face_)
    if (b) ++n;
  return n;
}

void CombinatorialSurface::retrace() {
  int n_darts = 0;
  for (const auto& rot : rotation_) n_darts += int(rot.size());
  dart_vertex_.assign(std::size_t(n_darts), -1);
  dart_slot_.assign(std::size_t(n_darts), -1);
  for (std::size_t v = 0; v < rotation_.size(); ++v) {
    for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
      int d = rotation_[v][i];
      if (d < 0 || d >= n_darts) throw Error("surface: dart id out of range");
      if (dart_vertex_[std::size_t(d)] != -1) throw Error("surface: dart listed twice in rotations");
      dart_vertex_[std::size_t(d)] = int(v);
      dart_slot_[std::size_t(d)] = int(i);
    }
  }
  for (int d = 0; d < n_darts; ++d)
    if (dart_vertex_[std::size_t(d)] == -1) throw Error("surface: dart missing from rotations");
  if (n_darts % 2 != 0) throw Error("surface: odd dart count");

  // face orbits of d -> rotation_next(twin(d))
  faces_.clear();
  dart_face_.assign(std::size_t(n_darts), -1);
  for (int d0 = 0; d0 < n_darts; ++d0) {
    if (dart_face_[std::size_t(d0)] != -1) continue;
    std::vector<int> walk;
    int d = d0;
    do {
      dart_face_[std::size_t(d)] = int(faces_.size());
      walk.push_back(d);
      d = face_next(d);
    } while (d != d0);
    faces_.push_back(std::move(walk));
  }
  boundary_face_.assign(faces_.size(), 0);

  // connectivity over the 1-skeleton
  connected_ = true;
  if (!rotation_.empty()) {
    std::vector<char> seen(rotation_.size(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int d : rotation_[std::size_t(v)]) {
        int u = dart_vertex_[std::size_t(twin(d))];
        if (!seen[std::size_t(u)]) {
          seen[std::size_t(u)] = 1;
          stack.push_back(u);
        }
      }
    }
    for (char c : seen)
      if (!c) connected_ = false;
  }
}

namespace {

bool same_cyclic_walk(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  auto it = std::find(a.begin(), a.end(), b.front());
  if (it == a.end()) return false;
  std::size_t off = std::size_t(it - a.begin());
  for (std::size_t i = 0; i < b.size(); ++i)
    if (a[(off + i) % a.size()] != b[i]) return false;
  return true;
}

}  // namespace

CombinatorialSurface build_surface(const SurfaceSpec& spec) {
  CombinatorialSurface s;
  s.rotation_ = spec.rotation;
  s.retrace();

  if (!spec.expected_faces.empty()) {
    std::vector<char> matched(s.faces_.size(), 0);
    for (const auto& want : spec.expected_faces) {
      if (want.empty()) throw Error("surface: empty expected face");
      int f = s.dart_face_[std::size_t(want.front())];
      if (matched[std::size_t(f)] || !same_cyclic_walk(s.faces_[std::size_t(f)], want))
        throw Error(
            "surface: expected face walk does not match the trace; the gluing is not the "
            "described surface (dart in two faces, or non-orientable identification)");
      matched[std::size_t(f)] = 1;
    }
    for (char m : matched)
      if (!m) throw Error("surface: traced face missing from the expected face list");
  }

  if (!s.connected_) throw Error("surface: disconnected complex");

  // boundary marks, keyed by a dart on the face
  for (int d : spec.boundary_face_darts) {
    if (d < 0 || d >= s.dart_count()) throw Error("surface: boundary dart out of range");
    s.boundary_face_[std::size_t(s.face_of(d))] = 1;
  }

  // genus normalization: attach 2h handle loops per marked face, giving the
  // face the boundary word (old walk) . [a1,b1]...[ah,bh]
  if (!spec.face_genus.empty()) {
    auto rot = s.rotation_;
    std::vector<char> face_used(s.faces_.size(), 0);
    std::vector<int> boundary_marks = spec.boundary_face_darts;
    int next_dart = s.dart_count();
    for (auto [dart, h] : spec.face_genus) {
      if (h < 1) throw Error("surface: face genus must be >= 1");
      int f = s.face_of(dart);
      if (face_used[std::size_t(f)]) throw Error("surface: face genus specified twice");
      if (s.boundary_face_[std::size_t(f)]) throw Error("surface: genus on a boundary face");
      face_used[std::size_t(f)] = 1;
      int u = s.dart_origin(dart);
      auto& r = rot[std::size_t(u)];
      auto pos = std::find(r.begin(), r.end(), dart);
      std::vector<int> insert;
      for (int i = 0; i < h; ++i) {
        int ap = next_dart++, aq = next_dart++;  // loop a: darts ap, aq = twin
        int bp = next_dart++, bq = next_dart++;  // loop b
        insert.push_back(ap);
        insert.push_back(bq);
        insert.push_back(aq);
        insert.push_back(bp);
      }
      r.insert(pos, insert.begin(), insert.end());
    }
    CombinatorialSurface t;
    t.rotation_ = std::move(rot);
    t.retrace();
    for (int d : boundary_marks) t.boundary_face_[std::size_t(t.face_of(d))] = 1;
    s = std::move(t);
  }

  // sanity: the involution pairs darts of distinct parity automatically;
  // a dart equal to its twin cannot be encoded, so only check edge count
  if (s.dart_count() % 2 != 0) throw Error("surface: dart involution not fixed-point-free");
  return s;
}

int euler_characteristic(const CombinatorialSurface& s) {
  return s.vertex_count() - s.edge_count() + s.filled_face_count();
}

int genus(const CombinatorialSurface& s) {
  int chi = euler_characteristic(s);
  int b = s.boundary_count();
  int twice = 2 - chi - b;
  if (twice % 2 != 0) throw Error("surface: non-orientable Euler characteristic");
  return twice / 2;
}

EdgeWalk EdgeWalk::reversed() const {
  EdgeWalk r;
  r.darts.reserve(darts.size());
  for (auto it = darts.rbegin(); it != darts.rend(); ++it) r.darts.push_back(twin(*it));
  return r;
}

void check_walk(const CombinatorialSurface& s, const EdgeWalk& w, const std::string& name) {
  if (w.empty()) throw Error("walk '" + name + "' is empty");
  for (std::size_t i = 0; i < w.darts.size(); ++i) {
    int d = w.darts[i];
    if (d < 0 || d >= s.dart_count()) throw Error("walk '" + name + "': dart out of range");
    if (i + 1 < w.darts.size() && s.dart_target(d) != s.dart_origin(w.darts[i + 1]))
      throw Error("walk '" + name + "': consecutive darts do not share a vertex (position " +
                  std::to_string(i) + ")");
  }
}

bool is_simple_closed(const CombinatorialSurface& s, const EdgeWalk& w) {
  if (!w.is_closed(s)) return false;
  std::vector<int> verts;
  for (std::size_t i = 0; i < w.darts.size(); ++i) verts.push_back(w.vertex_at(s, int(i)));
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) return false;
  // cyclic reducedness
  std::size_t n = w.darts.size();
  if (n >= 2)
    for (std::size_t i = 0; i < n; ++i)
      if (w.darts[(i + 1) % n] == twin(w.darts[i])) return false;
  return true;
}

EdgeWalk reduce_walk(const EdgeWalk& w, bool cyclic) {
  std::vector<int> out;
  for (int d : w.darts) {
    if (!out.empty() && out.back() == twin(d)) out.pop_back();
    else out.push_back(d);
  }
  if (cyclic) {
    while (out.size() >= 2 && out.front() == twin(out.back())) {
      out.erase(out.begin());
      out.pop_back();
    }
  }
  return EdgeWalk{std::move(out)};
}

EdgeWalk concatenate(const CombinatorialSurface& s, const EdgeWalk& mu, const EdgeWalk& eta) {
  check_walk(s, mu, "mu");
  check_walk(s, eta, "eta");
  if (mu.target(s) != eta.origin(s) || eta.target(s) != mu.origin(s))
    throw Error("concatenate: endpoint mismatch");
  EdgeWalk joined;
  joined.darts = mu.darts;
  joined.darts.insert(joined.darts.end(), eta.darts.begin(), eta.darts.end());
  return reduce_walk(joined, true);
}

EdgeWalk WalkMap::apply(const EdgeWalk& w) const {
  EdgeWalk out;
  for (int d : w.darts) {
    const auto& img = dart_images[std::size_t(d)];
    out.darts.insert(out.darts.end(), img.begin(), img.end());
  }
  return out;
}

SubdivideResult subdivide_edge(const CombinatorialSurface& s, int edge) {
  int d0 = forward_dart(edge), d1 = twin(d0);
  int n = s.dart_count();
  // new edge ids: old edge keeps darts d0,d1 but they become the two halves;
  // we renumber: half A = (d0 .. n), half B = (n+1 .. d1); mid vertex last.
  // Concretely: new darts n and n+1 form the second half edge.
  std::vector<std::vector<int>> rot;
  rot.reserve(std::size_t(s.vertex_count()) + 1);
  for (int v = 0; v < s.vertex_count(); ++v) rot.push_back(s.rotation(v));
  // d0: from origin(d0) to mid; n: from mid to target; twin(n)=n+1 at target replaces d1
  int mid = int(rot.size());
  for (auto& r : rot)
    for (auto& d : r)
      if (d == d1) d = n + 1;
  rot.push_back({n, d1});  // rotation at mid: outgoing second half, outgoing first-half twin
  CombinatorialSurface t;
  // build via spec to reuse validation/tracing
  SurfaceSpec spec;
  spec.rotation = std::move(rot);
  for (int f = 0; f < s.face_count(); ++f)
    if (s.face_is_boundary(f)) {
      int mark = s.face(f).front();
      if (mark == d1) mark = n + 1;
      spec.boundary_face_darts.push_back(mark);
    }
  t = build_surface(spec);
  WalkMap map;
  map.dart_images.assign(std::size_t(n), {});
  for (int d = 0; d < n; ++d) map.dart_images[std::size_t(d)] = {d};
  map.dart_images[std::size_t(d0)] = {d0, n};
  map.dart_images[std::size_t(d1)] = {n + 1, d1};
  return SubdivideResult{std::move(t), std::move(map), mid};
}

}  // namespace covertower

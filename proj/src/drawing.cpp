#include "treemorph/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace treemorph {

bool Drawing3D::is_planar(double tol) const {
  for (const Vec3& p : position)
    if (std::abs(p.z) > tol) return false;
  return true;
}

std::vector<Segment> Drawing3D::edge_segments() const {
  std::vector<Segment> segs;
  segs.reserve(tree->edge_count());
  for (auto [child, parent] : tree->edges())
    segs.push_back({position[child], position[parent]});
  return segs;
}

Drawing3D interpolate(const Drawing3D& a, const Drawing3D& b, double t) {
  if (a.n() != b.n()) throw std::invalid_argument("interpolate: vertex count mismatch");
  Drawing3D r;
  r.tree = a.tree;
  r.position.resize(a.position.size());
  for (size_t i = 0; i < a.position.size(); ++i)
    r.position[i] = lerp(a.position[i], b.position[i], t);
  return r;
}

bool same_positions(const Drawing3D& a, const Drawing3D& b, double tol) {
  if (a.n() != b.n()) return false;
  for (int i = 0; i < a.n(); ++i) {
    const Vec3 d = a.position[i] - b.position[i];
    if (std::abs(d.x) > tol || std::abs(d.y) > tol || std::abs(d.z) > tol) return false;
  }
  return true;
}

void Morph::push(const Drawing3D& d) {
  if (!keyframes.empty() && same_positions(keyframes.back(), d)) return;
  keyframes.push_back(d);
}

void Morph::append(const Morph& other) {
  for (const Drawing3D& k : other.keyframes) push(k);
}

Morph Morph::reversed() const {
  Morph m;
  m.keyframes.assign(keyframes.rbegin(), keyframes.rend());
  return m;
}

}  // namespace treemorph

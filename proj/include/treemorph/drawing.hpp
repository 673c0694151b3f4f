#pragma once

#include <memory>
#include <vector>

#include "treemorph/geometry.hpp"
#include "treemorph/tree.hpp"

namespace treemorph {

// Straight-line 3D drawing: one point per vertex, edges drawn as open
// segments between the images of their endpoints.
struct Drawing3D {
  std::shared_ptr<const RootedTree> tree;
  std::vector<Vec3> position;

  Drawing3D() = default;
  Drawing3D(std::shared_ptr<const RootedTree> t, std::vector<Vec3> pos)
      : tree(std::move(t)), position(std::move(pos)) {}

  int n() const { return static_cast<int>(position.size()); }
  bool is_planar(double tol = kGeomEps) const;  // all z == 0

  std::vector<Segment> edge_segments() const;
};

// Drawing at time t of the linear morph from `a` to `b` (uniform speed).
Drawing3D interpolate(const Drawing3D& a, const Drawing3D& b, double t);

bool same_positions(const Drawing3D& a, const Drawing3D& b, double tol = 0.0);

// Keyframe sequence; consecutive keyframes define the linear steps.
struct Morph {
  std::vector<Drawing3D> keyframes;

  int steps() const { return std::max(0, static_cast<int>(keyframes.size()) - 1); }

  // Appends a keyframe unless it repeats the previous one exactly.
  void push(const Drawing3D& d);

  // Concatenation; the first keyframe of `other` is merged when it matches.
  void append(const Morph& other);

  Morph reversed() const;
};

}  // namespace treemorph

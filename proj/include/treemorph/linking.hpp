#pragma once

#include <cstdint>
#include <vector>

#include "treemorph/drawing.hpp"

namespace treemorph {

// Two disjoint closed oriented polygonal curves.
struct PolygonalLink {
  std::vector<Vec3> curve_a;
  std::vector<Vec3> curve_b;
};

// Splits a path drawing at the given edge (the edge between vertices of path
// positions cut_edge and cut_edge+1, with path order = vertex id order) and
// closes each side with one invisible straight edge. Both sides need at least
// three vertices.
PolygonalLink close_link(const Drawing3D& path_drawing, int cut_edge);

// Linking number via signed crossings in a generic projection: half the
// signed sum over inter-curve crossings, with the understrand rotation rule.
// Generic directions are sampled from the seeded generator; non-generic ones
// are rejected and retried up to 100 times. Throws when the curves intersect
// or no generic direction is found.
long long linking_number(const PolygonalLink& link, uint64_t seed = 12345);

}  // namespace treemorph

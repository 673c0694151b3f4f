#pragma once

#include "treemorph/geometry.hpp"
#include "treemorph/polynomial.hpp"

namespace treemorph {

// Point on a linear track: position at time t is lerp(p0, p1, t).
struct MovingPoint {
  Vec3 p0, p1;
  Vec3 at(double t) const { return lerp(p0, p1, t); }
};

// Coordinate polynomials (degree <= 1 per component) of a difference of two
// moving points.
struct LinVec {
  Poly x, y, z;
};

inline LinVec lin_diff(const MovingPoint& a, const MovingPoint& b) {
  return {Poly{{a.p0.x - b.p0.x, (a.p1.x - a.p0.x) - (b.p1.x - b.p0.x)}},
          Poly{{a.p0.y - b.p0.y, (a.p1.y - a.p0.y) - (b.p1.y - b.p0.y)}},
          Poly{{a.p0.z - b.p0.z, (a.p1.z - a.p0.z) - (b.p1.z - b.p0.z)}}};
}

inline LinVec cross(const LinVec& a, const LinVec& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline Poly dot(const LinVec& a, const LinVec& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

// Minimum over t in [0,1] of the distance from moving point p to the moving
// closed segment (a, b). Candidate times come from the endpoint-distance
// quadratics, the projection-parameter boundaries, and the interior
// line-distance critical polynomial.
double min_distance_moving_point_segment(const MovingPoint& p, const MovingPoint& a,
                                         const MovingPoint& b);

// Minimum over t in [0,1] of |a(t) - b(t)|.
double min_distance_moving_points(const MovingPoint& a, const MovingPoint& b);

}  // namespace treemorph

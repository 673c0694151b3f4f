#pragma once

#include <cmath>
#include <span>
#include <utility>
#include <vector>

namespace treemorph {

// Boundary classification tolerance for geometric predicates.
inline constexpr double kGeomEps = 1e-9;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3() = default;
  Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }
inline double dist(const Vec3& a, const Vec3& b) { return norm(a - b); }
// Exact at both endpoints, also for coordinates of very different magnitude.
inline Vec3 lerp(const Vec3& a, const Vec3& b, double t) { return a * (1.0 - t) + b * t; }
inline Vec3 normalized(const Vec3& v) { return v / norm(v); }

struct Segment {
  Vec3 a, b;
};

// Upward-opening circular cone with a vertical axis through the apex.
// slope = rise over horizontal run of the generating ray, so the section
// at height z (z >= apex.z) is a circle of radius (z - apex.z) / slope.
struct Cone {
  Vec3 apex;
  double slope = 1.0;
};

// Straight cylinder over a horizontal circular base.
struct Cylinder {
  Vec3 base_center;
  double radius = 0.0;
  double height = 0.0;
};

// Horizontal annulus.
struct Annulus {
  Vec3 center;
  double inner_radius = 0.0;
  double outer_radius = 0.0;
};

// Horizontal distance from p to the cone's axis.
inline double axis_distance(const Cone& c, const Vec3& p) {
  return std::hypot(p.x - c.apex.x, p.y - c.apex.y);
}

// Radius of the horizontal section of the cone at height z. Throws if z is
// below the apex.
double cone_section_radius(const Cone& c, double z);

// Strictly outside: horizontal distance exceeds the section radius (or the
// point lies below the apex). Points on the boundary count as inside.
bool point_outside_cone(const Cone& c, const Vec3& p);

// Exact distance from p to the closest point of a set of closed segments.
double min_distance_point_to_segments(const Vec3& p, std::span<const Segment> segments);

double distance_point_segment(const Vec3& p, const Vec3& a, const Vec3& b);
Vec3 closest_point_on_segment(const Vec3& p, const Vec3& a, const Vec3& b);

// Closest distance between two closed segments (Ericson-style clamped solve).
double distance_segment_segment(const Vec3& p1, const Vec3& q1, const Vec3& p2, const Vec3& q2);

// Parameters (s, t) of the closest pair of points lerp(p1,q1,s), lerp(p2,q2,t).
std::pair<double, double> closest_segment_params(const Vec3& p1, const Vec3& q1, const Vec3& p2,
                                                 const Vec3& q2);

// Min/max distance from a center point to a drawing given as points plus
// segments. Max over segments is attained at segment endpoints.
struct DistanceRange {
  double min = 0.0;
  double max = 0.0;
};
DistanceRange distance_range(const Vec3& center, std::span<const Vec3> points,
                             std::span<const Segment> segments);

// Ratio between outer and inner radius of the minimum annulus centered at
// `center` that encloses the drawing. Throws when the drawing touches the
// center (inner radius 0).
double spread(const Vec3& center, std::span<const Vec3> points, std::span<const Segment> segments);

// Lowest apex position on the vertical axis through (axis_x, axis_y) such
// that every point of the drawing is outside or on the cone of the given
// slope. With no constraints the apex stays at initial_apex_z. Throws if the
// drawing touches the axis.
Cone slide_cone_to_touch(double slope, double axis_x, double axis_y, double initial_apex_z,
                         std::span<const Vec3> points, std::span<const Segment> segments);

// Smallest k >= 3 such that the regular k-gon inscribed in the outer circle
// of any annulus with radius ratio >= c stays strictly outside the inner
// circle, with a multiplicative safety margin on the inner radius.
int inscribed_polygon_order(double c, double safety_margin);

}  // namespace treemorph

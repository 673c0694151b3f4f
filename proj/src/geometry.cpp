#include "treemorph/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace treemorph {

double cone_section_radius(const Cone& c, double z) {
  if (z < c.apex.z - kGeomEps)
    throw std::invalid_argument("cone_section_radius: z below apex");
  if (c.slope <= 0.0)
    throw std::invalid_argument("cone_section_radius: nonpositive slope");
  return std::max(0.0, (z - c.apex.z) / c.slope);
}

bool point_outside_cone(const Cone& c, const Vec3& p) {
  if (p.z < c.apex.z - kGeomEps) return true;
  double r = std::max(0.0, (p.z - c.apex.z) / c.slope);
  return axis_distance(c, p) > r + kGeomEps;
}

Vec3 closest_point_on_segment(const Vec3& p, const Vec3& a, const Vec3& b) {
  Vec3 ab = b - a;
  double len2 = norm2(ab);
  if (len2 == 0.0) return a;
  double t = dot(p - a, ab) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return a + ab * t;
}

double distance_point_segment(const Vec3& p, const Vec3& a, const Vec3& b) {
  return dist(p, closest_point_on_segment(p, a, b));
}

double min_distance_point_to_segments(const Vec3& p, std::span<const Segment> segments) {
  if (segments.empty())
    throw std::invalid_argument("min_distance_point_to_segments: empty segment list");
  double best = std::numeric_limits<double>::infinity();
  for (const Segment& s : segments)
    best = std::min(best, distance_point_segment(p, s.a, s.b));
  return best;
}

std::pair<double, double> closest_segment_params(const Vec3& p1, const Vec3& q1, const Vec3& p2,
                                                 const Vec3& q2) {
  Vec3 d1 = q1 - p1;
  Vec3 d2 = q2 - p2;
  Vec3 r = p1 - p2;
  double a = norm2(d1);
  double e = norm2(d2);
  double f = dot(d2, r);

  double s, t;
  if (a == 0.0 && e == 0.0) return {0.0, 0.0};
  if (a == 0.0) {
    s = 0.0;
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    double c = dot(d1, r);
    if (e == 0.0) {
      t = 0.0;
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      double b = dot(d1, d2);
      double denom = a * e - b * b;
      s = denom != 0.0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  return {s, t};
}

double distance_segment_segment(const Vec3& p1, const Vec3& q1, const Vec3& p2, const Vec3& q2) {
  auto [s, t] = closest_segment_params(p1, q1, p2, q2);
  return dist(lerp(p1, q1, s), lerp(p2, q2, t));
}

DistanceRange distance_range(const Vec3& center, std::span<const Vec3> points,
                             std::span<const Segment> segments) {
  if (points.empty() && segments.empty())
    throw std::invalid_argument("distance_range: empty drawing");
  DistanceRange r{std::numeric_limits<double>::infinity(), 0.0};
  auto add_point = [&](const Vec3& p) {
    double d = dist(center, p);
    r.min = std::min(r.min, d);
    r.max = std::max(r.max, d);
  };
  for (const Vec3& p : points) add_point(p);
  for (const Segment& s : segments) {
    // Distance along a segment is convex: max at an endpoint, min at the foot.
    add_point(s.a);
    add_point(s.b);
    r.min = std::min(r.min, distance_point_segment(center, s.a, s.b));
  }
  return r;
}

double spread(const Vec3& center, std::span<const Vec3> points, std::span<const Segment> segments) {
  DistanceRange r = distance_range(center, points, segments);
  if (r.min <= kGeomEps)
    throw std::invalid_argument("spread: drawing touches the center (degenerate annulus)");
  return r.max / r.min;
}

namespace {

// Maximize the concave touching constraint z(t) - slope * axisdist(t) over a
// segment; ternary search is exact enough for the geometry tolerances.
double max_constraint_on_segment(double slope, double ax, double ay, const Segment& s) {
  auto f = [&](double t) {
    Vec3 p = lerp(s.a, s.b, t);
    return p.z - slope * std::hypot(p.x - ax, p.y - ay);
  };
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 100; ++i) {
    double m1 = lo + (hi - lo) / 3.0;
    double m2 = hi - (hi - lo) / 3.0;
    if (f(m1) < f(m2))
      lo = m1;
    else
      hi = m2;
  }
  return std::max({f(0.0), f(1.0), f(0.5 * (lo + hi))});
}

}  // namespace

Cone slide_cone_to_touch(double slope, double axis_x, double axis_y, double initial_apex_z,
                         std::span<const Vec3> points, std::span<const Segment> segments) {
  if (slope <= 0.0) throw std::invalid_argument("slide_cone_to_touch: nonpositive slope");
  bool any = false;
  double apex_z = -std::numeric_limits<double>::infinity();
  for (const Vec3& p : points) {
    double d = std::hypot(p.x - axis_x, p.y - axis_y);
    if (d <= kGeomEps)
      throw std::invalid_argument("slide_cone_to_touch: drawing point on the axis");
    apex_z = std::max(apex_z, p.z - slope * d);
    any = true;
  }
  for (const Segment& s : segments) {
    double da = std::hypot(s.a.x - axis_x, s.a.y - axis_y);
    double db = std::hypot(s.b.x - axis_x, s.b.y - axis_y);
    if (distance_point_segment({axis_x, axis_y, 0.0}, {s.a.x, s.a.y, 0.0}, {s.b.x, s.b.y, 0.0}) <=
        kGeomEps)
      throw std::invalid_argument("slide_cone_to_touch: drawing segment crosses the axis");
    (void)da;
    (void)db;
    apex_z = std::max(apex_z, max_constraint_on_segment(slope, axis_x, axis_y, s));
    any = true;
  }
  if (!any) apex_z = initial_apex_z;
  return Cone{{axis_x, axis_y, apex_z}, slope};
}

int inscribed_polygon_order(double c, double safety_margin) {
  if (c <= 1.0) throw std::invalid_argument("inscribed_polygon_order: requires c > 1");
  double target = (1.0 + safety_margin) / c;
  if (target >= 1.0)
    throw std::invalid_argument("inscribed_polygon_order: margin too large for this c");
  int k = 3;
  while (std::cos(M_PI / k) <= target) {
    ++k;
    if (k > 1 << 20)
      throw std::runtime_error("inscribed_polygon_order: no reasonable k");
  }
  return k;
}

}  // namespace treemorph

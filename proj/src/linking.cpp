#include "treemorph/linking.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "treemorph/verify.hpp"

namespace treemorph {

PolygonalLink close_link(const Drawing3D& path_drawing, int cut_edge) {
  int n = path_drawing.n();
  if (cut_edge < 0 || cut_edge >= n - 1)
    throw std::invalid_argument("close_link: cut edge out of range");
  int left = cut_edge + 1;       // vertices 0..cut_edge
  int right = n - cut_edge - 1;  // vertices cut_edge+1..n-1
  if (left < 3 || right < 3)
    throw std::invalid_argument("close_link: each side needs at least 3 vertices");
  PolygonalLink link;
  link.curve_a.assign(path_drawing.position.begin(), path_drawing.position.begin() + left);
  link.curve_b.assign(path_drawing.position.begin() + left, path_drawing.position.end());
  return link;
}

namespace {

double canonical_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Vec3 random_unit_direction(std::mt19937_64& rng) {
  // Rejection sample inside the unit ball.
  for (;;) {
    Vec3 v{2.0 * canonical_unit(rng) - 1.0, 2.0 * canonical_unit(rng) - 1.0,
           2.0 * canonical_unit(rng) - 1.0};
    double n2 = norm2(v);
    if (n2 > 1e-4 && n2 <= 1.0) return v / std::sqrt(n2);
  }
}

struct Proj {
  double u, v;    // in-plane coordinates
  double depth;   // along the view direction
};

struct CrossingSum {
  bool generic = true;
  long long signed_sum = 0;
};

// Signed crossings between the projections of the two curves. Over/under is
// decided by depth along the view direction; the sign is the orientation of
// (over-direction, under-direction) in the projection plane.
CrossingSum sum_crossings(const std::vector<Proj>& a, const std::vector<Proj>& b) {
  CrossingSum out;
  auto seg = [](const std::vector<Proj>& c, size_t i) {
    return std::pair<Proj, Proj>(c[i], c[(i + 1) % c.size()]);
  };
  const double kParamEps = 1e-9;
  for (size_t i = 0; i < a.size(); ++i) {
    auto [p1, p2] = seg(a, i);
    double d1u = p2.u - p1.u, d1v = p2.v - p1.v;
    for (size_t j = 0; j < b.size(); ++j) {
      auto [q1, q2] = seg(b, j);
      double d2u = q2.u - q1.u, d2v = q2.v - q1.v;
      double denom = d1u * d2v - d1v * d2u;
      double ru = q1.u - p1.u, rv = q1.v - p1.v;
      double seg_scale = std::max({std::abs(d1u), std::abs(d1v), std::abs(d2u), std::abs(d2v)});
      if (std::abs(denom) < 1e-13 * std::max(1.0, seg_scale * seg_scale)) {
        // Parallel projections; only an actual collinear overlap is
        // non-generic (collinear disjoint segments are fine).
        double crossr = ru * d1v - rv * d1u;
        double len2 = d1u * d1u + d1v * d1v;
        if (std::abs(crossr) < 1e-10 * std::max(1.0, seg_scale) && len2 > 0.0) {
          double t0 = (ru * d1u + rv * d1v) / len2;
          double t1 = t0 + (d2u * d1u + d2v * d1v) / len2;
          if (std::max(0.0, std::min(t0, t1)) <= std::min(1.0, std::max(t0, t1)) + 1e-9) {
            out.generic = false;
            return out;
          }
        }
        continue;
      }
      double s = (ru * d2v - rv * d2u) / denom;
      double t = (ru * d1v - rv * d1u) / denom;
      if (s < -kParamEps || s > 1.0 + kParamEps || t < -kParamEps || t > 1.0 + kParamEps)
        continue;
      if (s < kParamEps || s > 1.0 - kParamEps || t < kParamEps || t > 1.0 - kParamEps) {
        out.generic = false;  // crossing at a segment endpoint
        return out;
      }
      double depth_a = p1.depth + s * (p2.depth - p1.depth);
      double depth_b = q1.depth + t * (q2.depth - q1.depth);
      if (std::abs(depth_a - depth_b) < 1e-12) {
        out.generic = false;
        return out;
      }
      int orient = denom > 0.0 ? 1 : -1;  // sign of cross(d1, d2)
      // When a is the overstrand the crossing keeps the orientation sign;
      // otherwise it flips. Calibrated against the Gauss integral.
      out.signed_sum += depth_a > depth_b ? orient : -orient;
    }
  }
  return out;
}

}  // namespace

long long linking_number(const PolygonalLink& link, uint64_t seed) {
  if (link.curve_a.size() < 3 || link.curve_b.size() < 3)
    throw std::invalid_argument("linking_number: curves need at least 3 vertices");

  // The curves must be disjoint point sets.
  auto closed_segs = [](const std::vector<Vec3>& c) {
    std::vector<Segment> s;
    for (size_t i = 0; i < c.size(); ++i) s.push_back({c[i], c[(i + 1) % c.size()]});
    return s;
  };
  double scale = 0.0;
  for (const Vec3& p : link.curve_a) scale = std::max({scale, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
  for (const Vec3& p : link.curve_b) scale = std::max({scale, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
  double tol = pair_tolerance(scale);
  for (const Segment& s1 : closed_segs(link.curve_a))
    for (const Segment& s2 : closed_segs(link.curve_b))
      if (distance_segment_segment(s1.a, s1.b, s2.a, s2.b) < tol)
        throw std::invalid_argument("linking_number: curves intersect");

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Vec3 dir = random_unit_direction(rng);
    Vec3 any = std::abs(dir.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    Vec3 e1 = normalized(cross(dir, any));
    Vec3 e2 = cross(dir, e1);

    auto project = [&](const std::vector<Vec3>& c) {
      std::vector<Proj> out;
      out.reserve(c.size());
      for (const Vec3& p : c) out.push_back({dot(p, e1), dot(p, e2), dot(p, dir)});
      return out;
    };
    std::vector<Proj> pa = project(link.curve_a);
    std::vector<Proj> pb = project(link.curve_b);

    // Reject projections that bring distinct vertices too close.
    bool ok = true;
    std::vector<Proj> all = pa;
    all.insert(all.end(), pb.begin(), pb.end());
    double vtx_tol = 1e-7 * std::max(1.0, scale);
    for (size_t i = 0; i < all.size() && ok; ++i)
      for (size_t j = i + 1; j < all.size() && ok; ++j)
        if (std::hypot(all[i].u - all[j].u, all[i].v - all[j].v) < vtx_tol) ok = false;
    if (!ok) continue;

    CrossingSum s = sum_crossings(pa, pb);
    if (!s.generic) continue;
    if (s.signed_sum % 2 != 0) continue;  // inconsistent diagram, resample
    return s.signed_sum / 2;
  }
  throw std::runtime_error("linking_number: no generic projection found");
}

}  // namespace treemorph

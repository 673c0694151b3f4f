#pragma once

#include <string>

#include "treemorph/drawing.hpp"

namespace treemorph {

// Two open segments closer than this count as crossing. Applied relative to
// the coordinate scale of the edge pair under test, so huge intermediate
// keyframes are judged by the same proportional clearance as unit-scale ones.
inline constexpr double kCrossEps = 1e-9;

// Candidate crossing times within this distance of [0,1] endpoints are kept.
inline constexpr double kTimeEps = 1e-10;

struct CrossingReport {
  enum class Status { Clean, Violation };
  Status status = Status::Clean;
  int step = -1;       // morph step index; -1 for a single drawing/step
  double time = 0.0;   // time within the step
  int edge_a = -1;     // edge ids, indices into RootedTree::edges()
  int edge_b = -1;
  Vec3 witness;
  std::string detail;

  bool clean() const { return status == Status::Clean; }

  static CrossingReport ok() { return {}; }
};

// Tolerance used for one edge pair: kCrossEps relative to the pair's scale.
double pair_tolerance(double coordinate_scale);

// Static check: no two open edge segments of the drawing intersect. Edges
// sharing an endpoint violate only when they overlap collinearly beyond the
// shared vertex; a zero-length edge is a violation on its own.
CrossingReport verify_drawing(const Drawing3D& d);

// Crossing detection throughout the linear morph `from` -> `to`. For each
// vertex-disjoint edge pair the coplanarity determinant is a cubic in t whose
// real roots give the only candidate crossing times; persistently coplanar
// pairs fall back to a planar moving-segment analysis over the orientation
// polynomials. Pairs sharing a vertex are tested for collinear overlap times.
CrossingReport verify_linear_step(const Drawing3D& from, const Drawing3D& to,
                                  bool check_endpoints = true);

// Restricted step check for incremental verification: only the given edge's
// degeneracy and its pairs with every other edge are examined.
CrossingReport verify_linear_step_edge(const Drawing3D& from, const Drawing3D& to,
                                       int focus_edge);

// Restricted step check covering every pair with at least one endpoint among
// the flagged vertices (sufficient when the unflagged part of the drawing is
// static and was clean at the start of the step).
CrossingReport verify_linear_step_moving(const Drawing3D& from, const Drawing3D& to,
                                         const std::vector<char>& vertex_moved);

// Every keyframe must verify and every consecutive pair must be a clean
// linear step; the first offending step (lowest time within it) is reported.
CrossingReport verify_morph(const Morph& m);

}  // namespace treemorph

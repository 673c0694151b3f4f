#pragma once

#include <memory>

#include "treemorph/canonical.hpp"
#include "treemorph/drawing.hpp"

namespace treemorph {

struct MorphConfig {
  double c = 2.0;               // global well-separation constant, > 1
  double safety_margin = 0.05;  // inscribed-polygon clearance margin
  DecompositionKind kind = DecompositionKind::Heavy;
  bool verify_each_step = false;
};

// translate first, then scale uniformly about the origin.
struct Similarity {
  Vec3 translate;
  double scale = 1.0;
  Vec3 apply(const Vec3& p) const { return (p + translate) * scale; }
  Vec3 invert(const Vec3& p) const { return p / scale - translate; }
};

// Root to the origin, all vertices within distance 1/2 of it.
std::pair<Drawing3D, Similarity> normalize_input(const Drawing3D& g);

// Step 1: the root path moves onto the vertical axis at its canonical
// heights; every light subtree rides rigidly with its attachment vertex.
Drawing3D step1_set_pole(const Drawing3D& g, const PathDecomposition& decomp);

// Cones, planes and child volumes for one recursion level, in L order of the
// root path.
struct LightAllocation {
  int light_child = -1;
  int parent = -1;
  Cone inner, outer;
  double plane_z = 0.0;      // height z_t of the lift plane
  double inner_radius = 0.0; // section of the inner cone at the plane
  double outer_radius = 0.0; // section of the outer cone at the plane
  double closest_dist = 0.0; // distance from the attachment vertex to the subtree
  double scale = 1.0;        // inner_radius / closest_dist
  Cylinder child_cylinder;   // volume of the recursive morph, base at the lifted child
};

struct SpaceAllocation {
  Cylinder bounding;
  std::vector<LightAllocation> lights;
  std::vector<std::unique_ptr<SpaceAllocation>> children;  // aligned with lights
};

// Recursive space computation over the step-1 drawing: slides the slope-1
// cone to touch the first subtree, then per light child fixes the inner cone,
// separates the outer cone by min(slope/spread, slope/c), widens it around
// the child cylinder, and prepares the next cone so its sections dominate the
// current outer cone above the lift plane.
SpaceAllocation space(const Drawing3D& g1, const PathDecomposition& decomp,
                      const MorphConfig& config);

// Step 2: each light subtree maps to its plane, scaled horizontally about the
// pole so the closest point lands on the inner cone.
Drawing3D step2_lift(const Drawing3D& g1, const PathDecomposition& decomp,
                     const SpaceAllocation& alloc);

// Step 3: recursive morphs of all light subtrees, run in parallel (step s of
// the combined morph advances every child morph that still has steps).
Morph step3_recurse(const Drawing3D& g2, const PathDecomposition& decomp,
                    const MorphConfig& config, const SpaceAllocation& alloc);

// Step 4: whole-subtree translations that walk each attachment vertex along
// the regular polygon inscribed in its annulus, ending on the inner cone at
// angle zero; all subtrees rotate in parallel. Ends with the drawing in the
// plane y = 0.
Morph step4_rotate(const Drawing3D& g3, const PathDecomposition& decomp,
                   const MorphConfig& config, const SpaceAllocation& alloc);

// Step 5: uniform vertical drop per subtree to the canonical height.
Drawing3D step5_go_down(const Drawing3D& g4, const PathDecomposition& decomp,
                        const SpaceAllocation& alloc);

// Step 6: horizontal slide per subtree onto the canonical grid column.
Drawing3D step6_go_left(const Drawing3D& g5, const PathDecomposition& decomp,
                        const SpaceAllocation& alloc);

// Crossing-free morph from a planar drawing to the canonical drawing of its
// tree. Step count is O(path-tree height). Throws on invalid input, or on a
// verification failure when config.verify_each_step is set.
Morph canonize(const Drawing3D& g, const MorphConfig& config = {});

// Theorem-style composition: canonize(g1) followed by the reverse of
// canonize(g2). Works for topologically inequivalent inputs.
Morph morph_between_planar(const Drawing3D& g1, const Drawing3D& g2,
                           const MorphConfig& config = {});

}  // namespace treemorph

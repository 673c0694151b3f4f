#pragma once

#include <stdexcept>

#include "treemorph/drawing.hpp"

namespace treemorph {

// Raised when a recursive morph leaves too little room around an anchor for
// any positive riding offset the verifier could still resolve.
struct ClearanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Largest safe riding offset for reintroducing a removed leaf next to vertex
// u of the recursive morph: half of the minimum over all steps and times of
// the distance from u's moving position to every moving edge not incident to
// u, never exceeding half the distance to u's neighbors, capped by `cap`.
// Throws when the recursive morph leaves no clearance around u.
double choose_epsilon(const Morph& recursive, int u,
                      double cap = std::numeric_limits<double>::infinity());

// Crossing-free morph between two crossing-free 3D drawings of the same tree
// with at most 3n steps, by leaf-removal induction: one step brings the leaf
// close to its neighbor, the recursive morph carries it at a fixed small
// offset, and two final steps reorient and extend it to its final position.
// Every emitted step is verified; direction/offset retries resolve the rare
// degenerate alignments.
Morph morph3d(const Drawing3D& g1, const Drawing3D& g2);

}  // namespace treemorph

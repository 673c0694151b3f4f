#pragma once

#include "treemorph/drawing.hpp"

namespace treemorph {

// Crossing-free morph with exactly 2 steps between two planar drawings of the
// same n-vertex path, through the canonical path drawing. Throws when an
// input is not a path drawing, not planar, or not crossing-free.
Morph two_step_path_morph(const Drawing3D& g1, const Drawing3D& g2);

}  // namespace treemorph

#pragma once

#include <string>

#include "treemorph/drawing.hpp"

namespace treemorph {

// Depth-first positions where each vertex visits its light children first (in
// child order, which is the reverse of their order in L) and the followed
// child last. The root gets 0; along a followed path the positions skip over
// the light subtrees hanging below.
std::vector<int> dfs_positions(const RootedTree& tree, const PathDecomposition& decomp);

// v_i -> (0, 0, i) for the n-vertex path.
Drawing3D canonical_path_drawing(int n);

// v -> (dpt(v), 0, dfs(v)); the universal morph target.
Drawing3D canonical_tree_drawing(std::shared_ptr<const RootedTree> tree,
                                 const PathDecomposition& decomp);

struct GridCheck {
  bool ok = false;
  std::string reason;  // empty when ok
  int width = 0;       // max x over the drawing
};

// Verifies the grid shape of a canonical drawing: y == 0 everywhere, integer
// coordinates, x within [0, path-tree height] with the maximum attained,
// z a permutation of 0..n-1, and z >= x at every vertex.
GridCheck canonical_grid_check(const Drawing3D& drawing, const PathDecomposition& decomp);

}  // namespace treemorph

#pragma once

#include <cstdint>
#include <memory>

#include "treemorph/drawing.hpp"

namespace treemorph {

std::shared_ptr<const RootedTree> make_path_tree(int n);
std::shared_ptr<const RootedTree> make_caterpillar(int n);   // spine of ceil(n/2), one leaf each
std::shared_ptr<const RootedTree> make_binary_tree(int n);   // complete binary shape
std::shared_ptr<const RootedTree> make_random_tree(int n, uint64_t seed);
std::shared_ptr<const RootedTree> make_star(int leaves);

// Crossing-free planar drawing (z = 0) of the tree: recursive sector layout
// with jittered proportions; the result is verified before returning.
Drawing3D random_planar_drawing(std::shared_ptr<const RootedTree> tree, uint64_t seed);

// Crossing-free 3D drawing with positions sampled in a cube, rejected until
// the verifier accepts (general position makes retries rare).
Drawing3D random_3d_drawing(std::shared_ptr<const RootedTree> tree, uint64_t seed);

// Mirror image across the yz-plane (x -> -x); topologically inequivalent to
// the original drawing in the plane.
Drawing3D mirror_x(const Drawing3D& d);

// Path drawing of two interlocked rectangular coils of linearly growing turn
// counts; cutting the connecting edge and closing both sides yields a link
// whose linking number grows quadratically in n. Requires n >= 10.
Drawing3D spiral_drawing(int n);

// Edge index of the connector between the two coils of spiral_drawing(n).
int spiral_cut_edge(int n);

// Path vertices in order along the unit parabola z = x^2 in the plane y = 0.
Drawing3D parabola_path_drawing(int n);

// Crossing-free planar drawing of a path generated by a self-avoiding random
// walk (ids in path order).
Drawing3D random_planar_path_drawing(int n, uint64_t seed);

}  // namespace treemorph

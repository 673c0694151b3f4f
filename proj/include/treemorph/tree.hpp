#pragma once

#include <memory>
#include <utility>
#include <vector>

namespace treemorph {

// Rooted tree over dense vertex ids 0..n-1. Children are kept sorted by id so
// every derived structure is reproducible.
class RootedTree {
 public:
  // parent_edges: (child, parent) pairs, exactly n-1 of them.
  RootedTree(int n, int root, const std::vector<std::pair<int, int>>& parent_edges);

  int vertex_count() const { return n_; }
  int root() const { return root_; }
  int parent(int v) const { return parent_[v]; }  // -1 for the root
  const std::vector<int>& children(int v) const { return children_[v]; }
  bool is_leaf(int v) const { return children_[v].empty(); }
  int edge_count() const { return n_ - 1; }

  // Edges as (child, parent) pairs, ordered by child id.
  std::vector<std::pair<int, int>> edges() const;

  // True when every vertex has at most one child (a path rooted at one end).
  bool is_root_path() const;

 private:
  int n_;
  int root_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
};

std::vector<int> subtree_sizes(const RootedTree& tree);

// Bottom-up branching index: leaves 1; a vertex gets s+1 when its two largest
// child values tie at s, otherwise the maximum child value.
std::vector<int> strahler_numbers(const RootedTree& tree);

enum class DecompositionKind { Heavy, Strahler };

// Partition of the vertices into root-to-leaf following paths (head first),
// plus the path tree over them and the rotation order of light children.
struct PathDecomposition {
  DecompositionKind kind = DecompositionKind::Heavy;
  std::vector<std::vector<int>> paths;   // each head-first
  std::vector<int> path_of;              // vertex -> path index
  std::vector<int> path_parent;          // path index -> parent path (-1 for root path)
  std::vector<int> dpt;                  // vertex -> depth of its path in the path tree
  std::vector<std::vector<int>> light_order;  // per path: sequence L of light children
  std::vector<int> followed_child;       // per vertex: heavy/followed child, -1 at leaves

  int path_tree_height() const;
};

// Followed child maximizes subtree size; ties broken by smallest vertex id.
PathDecomposition heavy_path_decomposition(const RootedTree& tree);

// Followed child maximizes the Strahler number; ties broken by smallest id.
// The resulting path tree has height Strahler(T) - 1.
PathDecomposition strahler_decomposition(const RootedTree& tree);

PathDecomposition decompose(const RootedTree& tree, DecompositionKind kind);

// The ordered sequence L for one path: light children of deeper path vertices
// first, and per vertex in reverse child order.
std::vector<int> light_children_sequence(const PathDecomposition& d, int path_index);

// Subtree rooted at `root_vertex`, reindexed to dense ids that preserve the
// original id order (so id tie-breaks agree between the levels).
struct SubtreeRef {
  std::shared_ptr<const RootedTree> tree;
  std::vector<int> to_outer;  // local id -> enclosing-tree id
  std::vector<int> to_local;  // enclosing-tree id -> local id, -1 outside
};

SubtreeRef extract_subtree(const RootedTree& tree, int root_vertex);

// Vertices of the subtree rooted at v, in the enclosing tree's ids.
std::vector<int> subtree_vertices(const RootedTree& tree, int v);

}  // namespace treemorph

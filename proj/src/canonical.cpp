#include "treemorph/canonical.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace treemorph {

std::vector<int> dfs_positions(const RootedTree& tree, const PathDecomposition& decomp) {
  int n = tree.vertex_count();
  if (static_cast<int>(decomp.path_of.size()) != n)
    throw std::invalid_argument("dfs_positions: decomposition does not match tree");
  std::vector<int> pos(n, -1);
  int next = 0;
  // Explicit stack; children pushed in reverse visiting order.
  std::vector<int> stack{tree.root()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    pos[v] = next++;
    int followed = decomp.followed_child[v];
    if (followed != -1) stack.push_back(followed);
    const std::vector<int>& ch = tree.children(v);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it)
      if (*it != followed) stack.push_back(*it);
  }
  return pos;
}

Drawing3D canonical_path_drawing(int n) {
  if (n < 1) throw std::invalid_argument("canonical_path_drawing: n must be positive");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i - 1);
  auto tree = std::make_shared<RootedTree>(n, 0, edges);
  std::vector<Vec3> pos(n);
  for (int i = 0; i < n; ++i) pos[i] = {0.0, 0.0, static_cast<double>(i)};
  return Drawing3D{tree, std::move(pos)};
}

Drawing3D canonical_tree_drawing(std::shared_ptr<const RootedTree> tree,
                                 const PathDecomposition& decomp) {
  int n = tree->vertex_count();
  if (static_cast<int>(decomp.dpt.size()) != n)
    throw std::invalid_argument("canonical_tree_drawing: decomposition does not match tree");
  std::vector<int> dfs = dfs_positions(*tree, decomp);
  std::vector<Vec3> pos(n);
  for (int v = 0; v < n; ++v)
    pos[v] = {static_cast<double>(decomp.dpt[v]), 0.0, static_cast<double>(dfs[v])};
  return Drawing3D{std::move(tree), std::move(pos)};
}

GridCheck canonical_grid_check(const Drawing3D& drawing, const PathDecomposition& decomp) {
  GridCheck r;
  int n = drawing.n();
  int h = decomp.path_tree_height();
  std::vector<char> z_seen(n, 0);
  int max_x = 0;
  for (int v = 0; v < n; ++v) {
    const Vec3& p = drawing.position[v];
    if (p.y != 0.0) {
      r.reason = "nonzero y coordinate";
      return r;
    }
    double xi = std::round(p.x), zi = std::round(p.z);
    if (p.x != xi || p.z != zi) {
      r.reason = "coordinate off the integer grid";
      return r;
    }
    if (xi < 0 || xi > h) {
      r.reason = "x outside [0, path-tree height]";
      return r;
    }
    if (zi < 0 || zi > n - 1) {
      r.reason = "z outside [0, n-1]";
      return r;
    }
    if (zi < xi) {
      r.reason = "vertex below the line z = x";
      return r;
    }
    if (z_seen[static_cast<int>(zi)]) {
      r.reason = "duplicate z coordinate";
      return r;
    }
    z_seen[static_cast<int>(zi)] = 1;
    max_x = std::max(max_x, static_cast<int>(xi));
  }
  r.width = max_x;
  if (max_x != h) {
    r.reason = "width differs from path-tree height";
    return r;
  }
  r.ok = true;
  return r;
}

}  // namespace treemorph

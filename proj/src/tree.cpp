#include "treemorph/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace treemorph {

RootedTree::RootedTree(int n, int root, const std::vector<std::pair<int, int>>& parent_edges)
    : n_(n), root_(root), parent_(n, -1), children_(n) {
  if (n <= 0) throw std::invalid_argument("RootedTree: vertex count must be positive");
  if (root < 0 || root >= n) throw std::invalid_argument("RootedTree: root id out of range");
  if (static_cast<int>(parent_edges.size()) != n - 1)
    throw std::invalid_argument("RootedTree: expected n-1 edges");

  for (auto [child, parent] : parent_edges) {
    if (child < 0 || child >= n || parent < 0 || parent >= n)
      throw std::invalid_argument("RootedTree: vertex id out of range");
    if (child == root) throw std::invalid_argument("RootedTree: root cannot have a parent");
    if (parent_[child] != -1) throw std::invalid_argument("RootedTree: duplicate parent for vertex");
    parent_[child] = parent;
    children_[parent].push_back(child);
  }
  for (int v = 0; v < n; ++v) {
    if (v != root && parent_[v] == -1)
      throw std::invalid_argument("RootedTree: vertex without parent");
    std::sort(children_[v].begin(), children_[v].end());
  }

  // Connectivity (and therefore acyclicity, given n-1 edges).
  std::vector<int> stack{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int c : children_[v]) {
      if (seen[c]) throw std::invalid_argument("RootedTree: cycle detected");
      seen[c] = 1;
      ++count;
      stack.push_back(c);
    }
  }
  if (count != n) throw std::invalid_argument("RootedTree: not connected");
}

std::vector<std::pair<int, int>> RootedTree::edges() const {
  std::vector<std::pair<int, int>> e;
  e.reserve(n_ - 1);
  for (int v = 0; v < n_; ++v)
    if (v != root_) e.emplace_back(v, parent_[v]);
  return e;
}

bool RootedTree::is_root_path() const {
  for (int v = 0; v < n_; ++v)
    if (children_[v].size() > 1) return false;
  return true;
}

std::vector<int> subtree_sizes(const RootedTree& tree) {
  int n = tree.vertex_count();
  std::vector<int> size(n, 1);
  // Vertices in reverse BFS order so children are finished before parents.
  std::vector<int> order;
  order.reserve(n);
  order.push_back(tree.root());
  for (size_t i = 0; i < order.size(); ++i)
    for (int c : tree.children(order[i])) order.push_back(c);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (int c : tree.children(*it)) size[*it] += size[c];
  return size;
}

std::vector<int> strahler_numbers(const RootedTree& tree) {
  int n = tree.vertex_count();
  std::vector<int> s(n, 1);
  std::vector<int> order;
  order.reserve(n);
  order.push_back(tree.root());
  for (size_t i = 0; i < order.size(); ++i)
    for (int c : tree.children(order[i])) order.push_back(c);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (tree.is_leaf(v)) continue;
    int best = 0, second = 0;
    for (int c : tree.children(v)) {
      if (s[c] > best) {
        second = best;
        best = s[c];
      } else if (s[c] > second) {
        second = s[c];
      }
    }
    s[v] = (second == best && tree.children(v).size() >= 2) ? best + 1 : best;
  }
  return s;
}

int PathDecomposition::path_tree_height() const {
  int h = 0;
  for (int d : dpt) h = std::max(h, d);
  return h;
}

namespace {

PathDecomposition build_decomposition(const RootedTree& tree, const std::vector<int>& score,
                                      DecompositionKind kind) {
  int n = tree.vertex_count();
  PathDecomposition d;
  d.kind = kind;
  d.followed_child.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int best = -1;
    for (int c : tree.children(v)) {
      if (best == -1 || score[c] > score[best]) best = c;  // ties: smallest id wins
    }
    d.followed_child[v] = best;
  }

  d.path_of.assign(n, -1);
  d.dpt.assign(n, 0);

  // Heads are the root and every non-followed child; walk paths from each head.
  // Paths are discovered in BFS order over the path tree for stable ids.
  std::vector<int> head_queue{tree.root()};
  std::vector<int> head_parent_path{-1};
  for (size_t qi = 0; qi < head_queue.size(); ++qi) {
    int head = head_queue[qi];
    int path_id = static_cast<int>(d.paths.size());
    d.paths.emplace_back();
    d.path_parent.push_back(head_parent_path[qi]);
    int depth = head_parent_path[qi] == -1 ? 0 : d.dpt[d.paths[head_parent_path[qi]][0]] + 1;
    int v = head;
    while (v != -1) {
      d.paths[path_id].push_back(v);
      d.path_of[v] = path_id;
      d.dpt[v] = depth;
      for (int c : tree.children(v)) {
        if (c != d.followed_child[v]) {
          head_queue.push_back(c);
          head_parent_path.push_back(path_id);
        }
      }
      v = d.followed_child[v];
    }
  }

  // L order: light children of deeper path vertices first; per vertex the
  // light children are taken in reverse child order.
  d.light_order.assign(d.paths.size(), {});
  for (size_t p = 0; p < d.paths.size(); ++p) {
    const std::vector<int>& path = d.paths[p];
    for (auto vi = path.rbegin(); vi != path.rend(); ++vi) {
      const std::vector<int>& ch = tree.children(*vi);
      for (auto ci = ch.rbegin(); ci != ch.rend(); ++ci)
        if (*ci != d.followed_child[*vi]) d.light_order[p].push_back(*ci);
    }
  }
  return d;
}

}  // namespace

PathDecomposition heavy_path_decomposition(const RootedTree& tree) {
  return build_decomposition(tree, subtree_sizes(tree), DecompositionKind::Heavy);
}

PathDecomposition strahler_decomposition(const RootedTree& tree) {
  return build_decomposition(tree, strahler_numbers(tree), DecompositionKind::Strahler);
}

PathDecomposition decompose(const RootedTree& tree, DecompositionKind kind) {
  return kind == DecompositionKind::Heavy ? heavy_path_decomposition(tree)
                                          : strahler_decomposition(tree);
}

std::vector<int> light_children_sequence(const PathDecomposition& d, int path_index) {
  if (path_index < 0 || path_index >= static_cast<int>(d.light_order.size()))
    throw std::out_of_range("light_children_sequence: no such path");
  return d.light_order[path_index];
}

std::vector<int> subtree_vertices(const RootedTree& tree, int v) {
  std::vector<int> verts;
  std::vector<int> stack{v};
  while (!stack.empty()) {
    int w = stack.back();
    stack.pop_back();
    verts.push_back(w);
    for (int c : tree.children(w)) stack.push_back(c);
  }
  std::sort(verts.begin(), verts.end());
  return verts;
}

SubtreeRef extract_subtree(const RootedTree& tree, int root_vertex) {
  SubtreeRef ref;
  ref.to_outer = subtree_vertices(tree, root_vertex);
  ref.to_local.assign(tree.vertex_count(), -1);
  for (size_t i = 0; i < ref.to_outer.size(); ++i) ref.to_local[ref.to_outer[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (int v : ref.to_outer)
    if (v != root_vertex) edges.emplace_back(ref.to_local[v], ref.to_local[tree.parent(v)]);
  ref.tree = std::make_shared<RootedTree>(static_cast<int>(ref.to_outer.size()),
                                          ref.to_local[root_vertex], edges);
  return ref;
}

}  // namespace treemorph

#pragma once

// Enumeration of all unlabeled rooted trees on n vertices via canonical level
// sequences (Beyer–Hedetniemi successor rule). Each sequence is converted to
// a parent array: the parent of vertex i is the nearest j < i one level up.

#include <memory>
#include <vector>

#include "treemorph/tree.hpp"

namespace treemorph::testsupport {

inline std::vector<std::vector<int>> all_level_sequences(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> level(n);
  for (int i = 0; i < n; ++i) level[i] = i + 1;  // the path
  for (;;) {
    out.push_back(level);
    int p = -1;
    for (int i = n - 1; i >= 0; --i)
      if (level[i] > 2) {
        p = i;
        break;
      }
    if (p < 0) break;
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
      if (level[i] == level[p] - 1) {
        q = i;
        break;
      }
    for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
  return out;
}

inline std::shared_ptr<const RootedTree> tree_from_levels(const std::vector<int>& level) {
  int n = static_cast<int>(level.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    for (int j = i - 1; j >= 0; --j)
      if (level[j] == level[i] - 1) {
        edges.emplace_back(i, j);
        break;
      }
  }
  return std::make_shared<RootedTree>(n, 0, edges);
}

inline std::vector<std::shared_ptr<const RootedTree>> all_rooted_trees(int n) {
  std::vector<std::shared_ptr<const RootedTree>> out;
  for (const auto& level : all_level_sequences(n)) out.push_back(tree_from_levels(level));
  return out;
}

}  // namespace treemorph::testsupport

#include "treemorph/path_morph.hpp"

#include <stdexcept>

#include "treemorph/canonical.hpp"
#include "treemorph/verify.hpp"

namespace treemorph {

Morph two_step_path_morph(const Drawing3D& g1, const Drawing3D& g2) {
  if (g1.n() != g2.n()) throw std::invalid_argument("two_step_path_morph: size mismatch");
  for (const Drawing3D* g : {&g1, &g2}) {
    if (!g->tree || !g->tree->is_root_path())
      throw std::invalid_argument("two_step_path_morph: input is not a path");
    if (!g->is_planar())
      throw std::invalid_argument("two_step_path_morph: input is not planar (z != 0)");
    CrossingReport r = verify_drawing(*g);
    if (!r.clean())
      throw std::invalid_argument("two_step_path_morph: input drawing is not crossing-free: " +
                                  r.detail);
  }

  // The canonical drawing lifts vertex i of the path to (0,0,i); both linear
  // halves stay crossing-free because the z order along the path is strict
  // for every t > 0.
  int n = g1.n();
  Drawing3D canon = canonical_path_drawing(n);
  // Map canonical positions through the actual path order of the input tree.
  std::vector<int> order;
  order.reserve(n);
  int v = g1.tree->root();
  while (true) {
    order.push_back(v);
    if (g1.tree->children(v).empty()) break;
    v = g1.tree->children(v)[0];
  }
  Drawing3D mid;
  mid.tree = g1.tree;
  mid.position.resize(n);
  for (int i = 0; i < n; ++i) mid.position[order[i]] = {0.0, 0.0, static_cast<double>(i)};

  // Always exactly two steps, even when a keyframe repeats.
  Morph m;
  m.keyframes = {g1, mid, g2};
  return m;
}

}  // namespace treemorph

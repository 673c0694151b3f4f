#pragma once

// Independent oracles used by the tests. These deliberately avoid the library
// implementation paths they check.

#include <cmath>
#include <functional>
#include <vector>

#include "treemorph/drawing.hpp"
#include "treemorph/verify.hpp"

namespace treemorph::testsupport {

// Strahler numbers straight from the recurrence, recursively.
inline int strahler_oracle(const RootedTree& tree, int v) {
  if (tree.is_leaf(v)) return 1;
  int best = 0, second = 0;
  for (int c : tree.children(v)) {
    int s = strahler_oracle(tree, c);
    if (s > best) {
      second = best;
      best = s;
    } else if (s > second) {
      second = s;
    }
  }
  return (tree.children(v).size() >= 2 && second == best) ? best + 1 : best;
}

// Incremental canonical construction: the root path goes on the pole with
// z increments |T(v_{i-1})| - |T(v_i)|, light children stack at x-offset 1 by
// subtree sizes, and subtrees are built recursively and translated. Used as a
// cross-check of the closed-form (dpt, 0, dfs) drawing.
inline void incremental_canonical_rec(const RootedTree& tree, const PathDecomposition& decomp,
                                      const std::vector<int>& sizes, int root, Vec3 base,
                                      std::vector<Vec3>& pos) {
  std::vector<int> chain{root};
  while (decomp.followed_child[chain.back()] != -1)
    chain.push_back(decomp.followed_child[chain.back()]);

  double z = 0.0;
  pos[chain[0]] = base;
  for (size_t i = 1; i < chain.size(); ++i) {
    z += sizes[chain[i - 1]] - sizes[chain[i]];
    pos[chain[i]] = base + Vec3{0.0, 0.0, z};
  }
  for (size_t i = 0; i < chain.size(); ++i) {
    double zi = pos[chain[i]].z - base.z;
    double next_z = 0.0;
    bool first = true;
    for (int c : tree.children(chain[i])) {
      if (c == decomp.followed_child[chain[i]]) continue;
      double zc = first ? zi + 1.0 : next_z;
      first = false;
      incremental_canonical_rec(tree, decomp, sizes, c, base + Vec3{1.0, 0.0, zc}, pos);
      next_z = zc + sizes[c];
    }
  }
}

inline Drawing3D incremental_canonical(std::shared_ptr<const RootedTree> tree,
                                       const PathDecomposition& decomp) {
  std::vector<int> sizes = subtree_sizes(*tree);
  Drawing3D d;
  d.tree = tree;
  d.position.assign(tree->vertex_count(), {});
  incremental_canonical_rec(*tree, decomp, sizes, tree->root(), {0.0, 0.0, 0.0}, d.position);
  return d;
}

// Dense-sampling + local bisection oracle for one moving edge pair: samples
// the closed-segment distance over t and refines around the sampled minimum.
struct MovingPair {
  Vec3 a0, a1, b0, b1;  // first edge endpoints, positions at t=0
  Vec3 A0, A1, B0, B1;  // positions at t=1
};

inline double pair_min_distance_sampled(const MovingPair& mp, int samples = 4096) {
  auto at = [&](double t) {
    return std::array<Vec3, 4>{lerp(mp.a0, mp.A0, t), lerp(mp.a1, mp.A1, t),
                               lerp(mp.b0, mp.B0, t), lerp(mp.b1, mp.B1, t)};
  };
  auto f = [&](double t) {
    auto p = at(t);
    return distance_segment_segment(p[0], p[1], p[2], p[3]);
  };
  double best = std::numeric_limits<double>::infinity();
  int best_i = 0;
  for (int i = 0; i <= samples; ++i) {
    double t = static_cast<double>(i) / samples;
    double d = f(t);
    if (d < best) {
      best = d;
      best_i = i;
    }
  }
  double lo = std::max(0.0, (best_i - 1.0) / samples);
  double hi = std::min(1.0, (best_i + 1.0) / samples);
  for (int it = 0; it < 120; ++it) {
    double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (f(m1) < f(m2))
      hi = m2;
    else
      lo = m1;
  }
  return std::min(best, f(0.5 * (lo + hi)));
}

// Numerical Gauss linking integral for two closed polygonal curves, with
// recursive subdivision where segments come close.
namespace gauss_detail {

inline const double kNodes[8] = {0.0198550717512319, 0.1016667612931866, 0.2372337950418355,
                                 0.4082826787521751, 0.5917173212478249, 0.7627662049581645,
                                 0.8983332387068134, 0.9801449282487681};
inline const double kWeights[8] = {0.0506142681451881, 0.1111905172266872, 0.1568533229389436,
                                   0.1813418916891810, 0.1813418916891810, 0.1568533229389436,
                                   0.1111905172266872, 0.0506142681451881};

inline double segment_pair(const Vec3& a0, const Vec3& a1, const Vec3& b0, const Vec3& b1,
                           int depth) {
  double len = norm(a1 - a0) + norm(b1 - b0);
  double d = distance_segment_segment(a0, a1, b0, b1);
  if (depth < 10 && d < 0.75 * len) {
    Vec3 am = (a0 + a1) * 0.5, bm = (b0 + b1) * 0.5;
    return segment_pair(a0, am, b0, bm, depth + 1) + segment_pair(a0, am, bm, b1, depth + 1) +
           segment_pair(am, a1, b0, bm, depth + 1) + segment_pair(am, a1, bm, b1, depth + 1);
  }
  Vec3 da = a1 - a0, db = b1 - b0;
  Vec3 c = cross(da, db);
  double sum = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Vec3 r = (a0 + da * kNodes[i]) - (b0 + db * kNodes[j]);
      double rn = norm(r);
      sum += kWeights[i] * kWeights[j] * dot(c, r) / (rn * rn * rn);
    }
  return sum;
}

}  // namespace gauss_detail

inline double gauss_linking_integral(const std::vector<Vec3>& curve_a,
                                     const std::vector<Vec3>& curve_b) {
  double total = 0.0;
  for (size_t i = 0; i < curve_a.size(); ++i) {
    const Vec3& a0 = curve_a[i];
    const Vec3& a1 = curve_a[(i + 1) % curve_a.size()];
    for (size_t j = 0; j < curve_b.size(); ++j) {
      const Vec3& b0 = curve_b[j];
      const Vec3& b1 = curve_b[(j + 1) % curve_b.size()];
      total += gauss_detail::segment_pair(a0, a1, b0, b1, 0);
    }
  }
  return total / (4.0 * M_PI);
}

}  // namespace treemorph::testsupport

#include "treemorph/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "treemorph/verify.hpp"

namespace treemorph {

namespace {

double unit01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * unit01(rng);
}

std::shared_ptr<const RootedTree> tree_from_parents(int n, int root,
                                                    const std::vector<int>& parent) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v)
    if (v != root) edges.emplace_back(v, parent[v]);
  return std::make_shared<RootedTree>(n, root, edges);
}

}  // namespace

std::shared_ptr<const RootedTree> make_path_tree(int n) {
  std::vector<int> parent(n, -1);
  for (int i = 1; i < n; ++i) parent[i] = i - 1;
  return tree_from_parents(n, 0, parent);
}

std::shared_ptr<const RootedTree> make_caterpillar(int n) {
  int spine = (n + 1) / 2;
  std::vector<int> parent(n, -1);
  for (int i = 1; i < spine; ++i) parent[i] = i - 1;
  for (int j = spine; j < n; ++j) parent[j] = j - spine;
  return tree_from_parents(n, 0, parent);
}

std::shared_ptr<const RootedTree> make_binary_tree(int n) {
  std::vector<int> parent(n, -1);
  for (int i = 1; i < n; ++i) parent[i] = (i - 1) / 2;
  return tree_from_parents(n, 0, parent);
}

std::shared_ptr<const RootedTree> make_random_tree(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> parent(n, -1);
  for (int i = 1; i < n; ++i) parent[i] = static_cast<int>(rng() % static_cast<uint64_t>(i));
  return tree_from_parents(n, 0, parent);
}

std::shared_ptr<const RootedTree> make_star(int leaves) {
  std::vector<int> parent(leaves + 1, -1);
  for (int i = 1; i <= leaves; ++i) parent[i] = 0;
  return tree_from_parents(leaves + 1, 0, parent);
}

namespace {

// Layered interval layout: vertex v sits at (x_v, -depth) with x_v inside the
// subtree's x interval, and children intervals partition the parent's. Edges
// span one layer, so the interval nesting rules out crossings at any depth
// (interval widths shrink with subtree size, never with depth alone).
void place_layered(const RootedTree& tree, const std::vector<int>& sizes, int v, double lo,
                   double hi, int depth, std::vector<Vec3>& out, std::mt19937_64& rng) {
  double w = hi - lo;
  out[v] = {lo + w * uniform(rng, 0.3, 0.7), -static_cast<double>(depth), 0.0};
  const auto& ch = tree.children(v);
  if (ch.empty()) return;

  double total = 0.0;
  std::vector<double> weight(ch.size());
  for (size_t i = 0; i < ch.size(); ++i) {
    weight[i] = sizes[ch[i]] * uniform(rng, 0.8, 1.25);
    total += weight[i];
  }
  // Children partition the interval exactly; interior vertex placement keeps
  // siblings strictly apart without a gap that would compound with depth.
  double x = lo;
  for (size_t i = 0; i < ch.size(); ++i) {
    double width = w * weight[i] / total;
    place_layered(tree, sizes, ch[i], x, x + width, depth + 1, out, rng);
    x += width;
  }
}

}  // namespace

Drawing3D random_planar_drawing(std::shared_ptr<const RootedTree> tree, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> sizes = subtree_sizes(*tree);
  Drawing3D d;
  d.tree = tree;
  d.position.resize(tree->vertex_count());
  place_layered(*tree, sizes, tree->root(), 0.0, static_cast<double>(tree->vertex_count()), 0,
                d.position, rng);
  CrossingReport r = verify_drawing(d);
  if (!r.clean())
    throw std::logic_error("random_planar_drawing: layout failed verification: " + r.detail);
  return d;
}

Drawing3D random_3d_drawing(std::shared_ptr<const RootedTree> tree, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Drawing3D d;
  d.tree = tree;
  d.position.resize(tree->vertex_count());
  for (int attempt = 0; attempt < 100; ++attempt) {
    for (Vec3& p : d.position)
      p = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
    if (verify_drawing(d).clean()) return d;
  }
  throw std::runtime_error("random_3d_drawing: no clean placement found");
}

Drawing3D mirror_x(const Drawing3D& d) {
  Drawing3D out = d;
  for (Vec3& p : out.position) p.x = -p.x;
  return out;
}

Drawing3D spiral_drawing(int n) {
  if (n < 10) throw std::invalid_argument("spiral_drawing: requires n >= 10");
  int e1 = n / 2;      // edges of the first coil
  int m1 = e1 + 1;     // its vertices
  int m2 = n - m1;     // vertices of the second coil

  Drawing3D d;
  d.tree = make_path_tree(n);
  d.position.resize(n);

  // First coil: tapered triangular loops around the z axis, descending from
  // z=1 to z=0. The wall at x=-s is the bundle the second coil threads.
  const double w = 0.55;
  const Vec3 corner1[3] = {{1.0, 0.0, 0.0}, {-1.0, w, 0.0}, {-1.0, -w, 0.0}};
  for (int j = 0; j < m1; ++j) {
    double u = static_cast<double>(j) / (m1 - 1);
    double s = 1.0 - 0.15 * u * u;  // taper keeps the closing chord off the corners
    const Vec3& c = corner1[j % 3];
    d.position[j] = {s * c.x, s * c.y, 1.0 - u};
  }

  // Second coil: tapered triangular loops around a y-parallel axis through
  // (-1, *, 0.5), advancing in -y, sized to swallow the first coil's wall.
  const double a = 0.55, b = 1.2, w2 = 0.3, zc = 0.5, xc = -1.0;
  const double corner2[3][2] = {{a, b}, {a, -b}, {-a, 0.0}};  // start at the top-right corner
  for (int i = 0; i < m2; ++i) {
    double v = static_cast<double>(i) / (m2 - 1);
    double sigma = 1.0 - 0.12 * v * v;
    double xi = corner2[i % 3][0], zeta = corner2[i % 3][1];
    d.position[m1 + i] = {xc + sigma * xi, w2 * (1.0 - 2.0 * v), zc + sigma * zeta};
  }

  CrossingReport r = verify_drawing(d);
  if (!r.clean())
    throw std::logic_error("spiral_drawing: construction failed verification: " + r.detail);
  return d;
}

int spiral_cut_edge(int n) { return n / 2; }

Drawing3D parabola_path_drawing(int n) {
  if (n < 1) throw std::invalid_argument("parabola_path_drawing: n must be positive");
  Drawing3D d;
  d.tree = make_path_tree(n);
  d.position.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = n == 1 ? 0.0 : -1.0 + 2.0 * i / (n - 1);
    d.position[i] = {x, 0.0, x * x};
  }
  return d;
}

Drawing3D random_planar_path_drawing(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int restart = 0; restart < 64; ++restart) {
    std::vector<Vec3> pts;
    pts.push_back({0.0, 0.0, 0.0});
    double heading = uniform(rng, 0.0, 2.0 * M_PI);
    bool stuck = false;
    while (static_cast<int>(pts.size()) < n && !stuck) {
      bool placed = false;
      double step = 1.0;
      for (int attempt = 0; attempt < 120 && !placed; ++attempt) {
        double turn = uniform(rng, -2.2, 2.2);
        double len = step * uniform(rng, 0.5, 1.0);
        Vec3 cand = pts.back() + Vec3{len * std::cos(heading + turn),
                                      len * std::sin(heading + turn), 0.0};
        const double clear = 0.04 * len;
        bool ok = true;
        // Keep the new edge clear of all earlier edges (the previous edge
        // only needs a proper angle at the shared vertex).
        for (size_t i = 0; i + 1 < pts.size() && ok; ++i) {
          double dd = distance_segment_segment(pts[i], pts[i + 1], pts.back(), cand);
          if (i + 2 == pts.size()) {
            Vec3 u1 = pts[i] - pts.back();
            Vec3 u2 = cand - pts.back();
            double cosang = dot(u1, u2) / (norm(u1) * norm(u2));
            if (cosang > 0.95) ok = false;
          } else if (dd < clear) {
            ok = false;
          }
        }
        if (ok) {
          heading = std::atan2(cand.y - pts.back().y, cand.x - pts.back().x);
          pts.push_back(cand);
          placed = true;
        }
        if (attempt % 30 == 29) step *= 0.6;
      }
      if (!placed) stuck = true;
    }
    if (static_cast<int>(pts.size()) == n) {
      Drawing3D d;
      d.tree = make_path_tree(n);
      d.position = std::move(pts);
      if (verify_drawing(d).clean()) return d;
    }
  }
  throw std::runtime_error("random_planar_path_drawing: walk failed to complete");
}

}  // namespace treemorph

#include "treemorph/morph3d.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "treemorph/motion.hpp"
#include "treemorph/verify.hpp"

namespace treemorph {

double min_distance_moving_points(const MovingPoint& a, const MovingPoint& b) {
  Poly n2 = dot(lin_diff(a, b), lin_diff(a, b));
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> cand = real_roots(n2.derivative(), 0.0, 1.0);
  cand.push_back(0.0);
  cand.push_back(1.0);
  for (double t : cand) best = std::min(best, std::sqrt(std::max(0.0, n2.eval(t))));
  return best;
}

double min_distance_moving_point_segment(const MovingPoint& p, const MovingPoint& a,
                                         const MovingPoint& b) {
  LinVec w = lin_diff(p, a);   // P - A
  LinVec e = lin_diff(b, a);   // B - A

  std::vector<double> cand{0.0, 1.0};
  auto add_roots = [&cand](const Poly& q, double lo, double hi) {
    for (double t : real_roots(q, lo, hi)) cand.push_back(t);
  };

  // Endpoint regimes: |P-A|^2 and |P-B|^2 are quadratics in t.
  Poly dA = dot(w, w);
  LinVec wb = lin_diff(p, b);
  Poly dB = dot(wb, wb);
  add_roots(dA.derivative(), 0.0, 1.0);
  add_roots(dB.derivative(), 0.0, 1.0);

  // Projection parameter boundaries: s*(t) = dot(w,e)/|e|^2 crossing 0 or 1.
  Poly num = dot(w, e);
  Poly den = dot(e, e);
  add_roots(num, 0.0, 1.0);
  add_roots(num - den, 0.0, 1.0);

  // Interior regime: distance to the line is N/D with N = |w x e|^2; critical
  // times solve N'D - ND' = 0 (degree <= 5).
  LinVec cr = cross(w, e);
  Poly N = dot(cr, cr);
  Poly crit = N.derivative() * den - N * den.derivative();
  add_roots(crit, 0.0, 1.0);

  double best = std::numeric_limits<double>::infinity();
  for (double t : cand) {
    if (t < 0.0 || t > 1.0) continue;
    best = std::min(best, distance_point_segment(p.at(t), a.at(t), b.at(t)));
  }
  return best;
}

namespace {

struct Removal {
  std::shared_ptr<const RootedTree> tree;  // tree without the leaf
  int leaf = -1;                           // removed vertex (old ids)
  int anchor = -1;                         // its neighbor (old ids)
  std::vector<int> old_of_new;             // new id -> old id
};

int new_id(int w, int removed) { return w > removed ? w - 1 : w; }

Removal remove_highest_leaf(const RootedTree& tree) {
  Removal r;
  for (int v = 0; v < tree.vertex_count(); ++v)
    if (tree.is_leaf(v) && v != tree.root()) r.leaf = std::max(r.leaf, v);
  if (r.leaf < 0) throw std::logic_error("remove_highest_leaf: no removable leaf");
  r.anchor = tree.parent(r.leaf);

  int n = tree.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int w = 0; w < n; ++w) {
    if (w == tree.root() || w == r.leaf) continue;
    edges.emplace_back(new_id(w, r.leaf), new_id(tree.parent(w), r.leaf));
  }
  r.tree = std::make_shared<RootedTree>(n - 1, new_id(tree.root(), r.leaf), edges);
  r.old_of_new.resize(n - 1);
  for (int w = 0; w < n; ++w)
    if (w != r.leaf) r.old_of_new[new_id(w, r.leaf)] = w;
  return r;
}

Drawing3D drop_vertex(const Drawing3D& d, const Removal& r) {
  Drawing3D out;
  out.tree = r.tree;
  out.position.resize(r.old_of_new.size());
  for (size_t i = 0; i < r.old_of_new.size(); ++i) out.position[i] = d.position[r.old_of_new[i]];
  return out;
}

// Index of the edge (child,parent) = (v, parent(v)) in RootedTree::edges().
int edge_index_of(const RootedTree& tree, int v) {
  int idx = 0;
  for (int w = 0; w < tree.vertex_count(); ++w) {
    if (w == tree.root()) continue;
    if (w == v) return idx;
    ++idx;
  }
  throw std::logic_error("edge_index_of: not a child vertex");
}

Vec3 perturb_direction(const Vec3& d, std::mt19937_64& rng, double amount) {
  auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
  Vec3 q = d + Vec3{unit(), unit(), unit()} * amount;
  double n = norm(q);
  return n > 1e-12 ? q / n : d;
}

Morph morph3d_rec(std::shared_ptr<const RootedTree> tree, const Drawing3D& d1,
                  const Drawing3D& d2, int depth, double eps_scale);

// Builds and incrementally verifies one level: bring the leaf in, ride it
// through the recursive morph at offset eps*dir from the anchor, reorient to
// the final edge direction, extend. Returns an empty morph when some step
// fails verification.
thread_local std::string g_last_failure;

Morph try_assemble(const RootedTree& tree, const Drawing3D& d1, const Drawing3D& d2,
                   const Removal& rem, const Morph& inner, double eps, const Vec3& dir,
                   const Vec3& final_dir) {
  int v = rem.leaf;
  int u = rem.anchor;
  int focus = edge_index_of(tree, v);

  auto lift = [&](const Drawing3D& base, const Vec3& v_pos) {
    Drawing3D out;
    out.tree = d1.tree;
    out.position.resize(tree.vertex_count());
    for (size_t i = 0; i < rem.old_of_new.size(); ++i)
      out.position[rem.old_of_new[i]] = base.position[i];
    out.position[v] = v_pos;
    return out;
  };

  int u_new = new_id(u, v);
  Morph m;
  m.keyframes.push_back(d1);

  // (a) one step into the riding offset.
  {
    Drawing3D prev = m.keyframes.back();
    Drawing3D ride0 =
        lift(inner.keyframes.front(), inner.keyframes.front().position[u_new] + dir * eps);
    size_t before = m.keyframes.size();
    m.push(ride0);
    if (m.keyframes.size() > before) {
      CrossingReport r = verify_linear_step(prev, m.keyframes.back());
      if (!r.clean()) {
        g_last_failure = "entry step: " + r.detail;
        return {};
      }
    }
  }

  // (b) ride through the recursive morph.
  for (size_t i = 1; i < inner.keyframes.size(); ++i) {
    Drawing3D prev = m.keyframes.back();
    Drawing3D next = lift(inner.keyframes[i], inner.keyframes[i].position[u_new] + dir * eps);
    size_t before = m.keyframes.size();
    m.push(next);
    if (m.keyframes.size() > before) {
      CrossingReport r = verify_linear_step_edge(prev, m.keyframes.back(), focus);
      if (!r.clean()) {
        g_last_failure = "ride step: " + r.detail;
        return {};
      }
    }
  }

  // (c) reorient within the ball, then extend along the final edge.
  Vec3 u_final = d2.position[u];
  if (dot(dir, final_dir) < 1.0 - 1e-12) {
    Drawing3D prev = m.keyframes.back();
    Drawing3D turn = lift(inner.keyframes.back(), u_final + final_dir * eps);
    size_t before = m.keyframes.size();
    m.push(turn);
    if (m.keyframes.size() > before) {
      CrossingReport r = verify_linear_step(prev, m.keyframes.back());
      if (!r.clean()) {
        g_last_failure = "turn step: " + r.detail;
        return {};
      }
    }
  }
  {
    Drawing3D prev = m.keyframes.back();
    size_t before = m.keyframes.size();
    m.push(d2);
    if (m.keyframes.size() > before) {
      CrossingReport r = verify_linear_step(prev, m.keyframes.back());
      if (!r.clean()) {
        g_last_failure = "extend step: " + r.detail;
        return {};
      }
    }
  }
  return m;
}

Morph morph3d_rec(std::shared_ptr<const RootedTree> tree, const Drawing3D& d1,
                  const Drawing3D& d2, int depth, double eps_scale) {
  Morph m;
  if (tree->vertex_count() == 1) {
    m.keyframes.push_back(d1);
    m.push(d2);
    return m;
  }

  Removal rem = remove_highest_leaf(*tree);
  Drawing3D s1 = drop_vertex(d1, rem);
  Drawing3D s2 = drop_vertex(d2, rem);
  Morph inner = morph3d_rec(rem.tree, s1, s2, depth + 1, eps_scale);

  int v = rem.leaf, u = rem.anchor;
  double cap = 0.5 * std::min(dist(d1.position[u], d1.position[v]),
                              dist(d2.position[u], d2.position[v]));
  double raw = choose_epsilon(inner, new_id(u, v), cap);
  double coord_span = 0.0;
  for (const Drawing3D* d : {&d1, &d2})
    for (const Vec3& p : d->position)
      coord_span = std::max({coord_span, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
  // The refined-offset retries shrink eps, but never below what the verifier
  // can comfortably distinguish from a degenerate edge.
  double floor_eps = std::min(raw, 16.0 * pair_tolerance(coord_span));
  double eps = std::min(cap, std::max(eps_scale * raw, floor_eps));

  Vec3 final_dir = normalized(d2.position[v] - d2.position[u]);
  Vec3 init_dir = normalized(d1.position[v] - d1.position[u]);

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + depth);
  double try_eps = eps;
  for (int attempt = 0; attempt < 32; ++attempt) {
    Vec3 dir;
    if (attempt == 0) dir = final_dir;       // fast path: no reorientation step
    else if (attempt == 1) dir = init_dir;   // ride along the initial edge direction
    else dir = perturb_direction(attempt % 2 ? final_dir : init_dir, rng, 0.4);
    if (attempt >= 2 && attempt % 8 == 0) try_eps *= 0.5;

    Morph out = try_assemble(*tree, d1, d2, rem, inner, try_eps, dir, final_dir);
    if (!out.keyframes.empty()) return out;
  }
  throw std::runtime_error("morph3d: could not complete level with " +
                           std::to_string(tree->vertex_count()) +
                           " vertices after all retries (last: " + g_last_failure + ")");
}

}  // namespace

double choose_epsilon(const Morph& recursive, int u, double cap) {
  if (recursive.keyframes.empty()) throw std::invalid_argument("choose_epsilon: empty morph");
  const RootedTree& tree = *recursive.keyframes.front().tree;

  double clearance = std::numeric_limits<double>::infinity();

  for (int s = 0; s < std::max(1, recursive.steps()); ++s) {
    const Drawing3D& from = recursive.keyframes[s];
    const Drawing3D& to = recursive.keyframes[std::min<size_t>(s + 1, recursive.keyframes.size() - 1)];
    MovingPoint pu{from.position[u], to.position[u]};
    for (auto [child, parent] : tree.edges()) {
      if (child == u || parent == u) continue;  // edges at u are handled angularly
      MovingPoint a{from.position[child], to.position[child]};
      MovingPoint b{from.position[parent], to.position[parent]};
      clearance = std::min(clearance, min_distance_moving_point_segment(pu, a, b));
    }
  }

  double scale = 0.0;
  for (const Drawing3D& k : recursive.keyframes)
    for (const Vec3& p : k.position)
      scale = std::max({scale, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
  if (clearance < 4.0 * pair_tolerance(scale))
    throw ClearanceError("choose_epsilon: recursive morph leaves no clearance around the anchor");

  return std::min(0.5 * clearance, cap);
}

Morph morph3d(const Drawing3D& g1, const Drawing3D& g2) {
  if (!g1.tree || !g2.tree) throw std::invalid_argument("morph3d: drawing without a tree");
  if (g1.n() != g2.n()) throw std::invalid_argument("morph3d: drawings of different sizes");
  CrossingReport r1 = verify_drawing(g1);
  if (!r1.clean()) throw std::invalid_argument("morph3d: first drawing not crossing-free: " + r1.detail);
  CrossingReport r2 = verify_drawing(g2);
  if (!r2.clean()) throw std::invalid_argument("morph3d: second drawing not crossing-free: " + r2.detail);

  // Globally smaller riding offsets leave more clearance around later
  // anchors; retry with refined offsets when the recursion gets too tight.
  const double scales[] = {1.0, 0.25, 0.0625};
  for (double sc : scales) {
    try {
      return morph3d_rec(g1.tree, g1, g2, 0, sc);
    } catch (const ClearanceError&) {
      if (sc == scales[std::size(scales) - 1]) throw;
    }
  }
  throw std::logic_error("morph3d: unreachable");
}

}  // namespace treemorph

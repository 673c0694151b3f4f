#include "treemorph/canonize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "treemorph/verify.hpp"

namespace treemorph {

namespace {

double hdist(const Vec3& p) { return std::hypot(p.x, p.y); }

struct LightSubtree {
  int child = -1;
  int parent = -1;
  double plane_z = 0.0;  // height of the parent (and of the riding subtree)
  std::vector<int> verts;
  std::vector<Vec3> pts;
  std::vector<Segment> segs;
};

// Light subtrees of the root path, in L order, with their step-1 drawings.
std::vector<LightSubtree> light_subtrees(const Drawing3D& g1, const PathDecomposition& decomp) {
  const RootedTree& tree = *g1.tree;
  std::vector<int> dfs = dfs_positions(tree, decomp);
  int root_path = decomp.path_of[tree.root()];
  std::vector<LightSubtree> out;
  for (int u : decomp.light_order[root_path]) {
    LightSubtree s;
    s.child = u;
    s.parent = tree.parent(u);
    s.plane_z = dfs[s.parent];
    s.verts = subtree_vertices(tree, u);
    for (int w : s.verts) s.pts.push_back(g1.position[w]);
    for (int w : s.verts)
      if (w != u) s.segs.push_back({g1.position[w], g1.position[tree.parent(w)]});
    out.push_back(std::move(s));
  }
  return out;
}

// The recursive child input: the lifted subtree expressed relative to its
// root, exactly as step 2 followed by a translation produces it.
Drawing3D child_slice(const RootedTree& tree, const Drawing3D& g1, const LightSubtree& sub,
                      double scale, const SubtreeRef& ref) {
  const Vec3& u_pos = g1.position[sub.child];
  double ux = scale * u_pos.x, uy = scale * u_pos.y;
  Drawing3D slice;
  slice.tree = ref.tree;
  slice.position.resize(ref.to_outer.size());
  for (int w : sub.verts) {
    const Vec3& p = g1.position[w];
    slice.position[ref.to_local[w]] = {scale * p.x - ux, scale * p.y - uy, 0.0};
  }
  (void)tree;
  return slice;
}

Morph canonize_level(const Drawing3D& g, const PathDecomposition& decomp,
                     const MorphConfig& config, const SpaceAllocation* prealloc,
                     bool top_level);

}  // namespace

std::pair<Drawing3D, Similarity> normalize_input(const Drawing3D& g) {
  const RootedTree& tree = *g.tree;
  Similarity s;
  s.translate = Vec3{0, 0, 0} - g.position[tree.root()];
  double maxd = 0.0;
  for (const Vec3& p : g.position) {
    Vec3 q = p + s.translate;
    maxd = std::max(maxd, std::hypot(q.x, q.y, q.z));
  }
  if (g.n() > 1 && maxd < kGeomEps)
    throw std::invalid_argument("normalize_input: all vertices coincident");
  s.scale = maxd > 0.5 ? 0.5 / maxd : 1.0;
  Drawing3D out;
  out.tree = g.tree;
  out.position.reserve(g.position.size());
  for (const Vec3& p : g.position) out.position.push_back(s.apply(p));
  return {std::move(out), s};
}

Drawing3D step1_set_pole(const Drawing3D& g, const PathDecomposition& decomp) {
  const RootedTree& tree = *g.tree;
  std::vector<int> dfs = dfs_positions(tree, decomp);
  int root_path = decomp.path_of[tree.root()];

  Drawing3D out = g;
  for (int v : decomp.paths[root_path])
    out.position[v] = {0.0, 0.0, static_cast<double>(dfs[v])};
  for (int v : decomp.paths[root_path]) {
    Vec3 delta = out.position[v] - g.position[v];
    for (int u : tree.children(v)) {
      if (u == decomp.followed_child[v]) continue;
      for (int w : subtree_vertices(tree, u)) out.position[w] = g.position[w] + delta;
    }
  }
  return out;
}

SpaceAllocation space(const Drawing3D& g1, const PathDecomposition& decomp,
                      const MorphConfig& config) {
  if (config.c <= 1.0) throw std::invalid_argument("space: the global constant needs c > 1");
  const RootedTree& tree = *g1.tree;
  int n = tree.vertex_count();

  SpaceAllocation out;
  if (tree.is_root_path()) {
    out.bounding = Cylinder{{0.0, 0.0, 0.0}, 1.0, static_cast<double>(n - 1)};
    return out;
  }

  std::vector<LightSubtree> subs = light_subtrees(g1, decomp);
  int l = static_cast<int>(subs.size());

  // Initial slope-1 cone, slid down from the top of the pole until it
  // touches the first subtree.
  Cone cone = slide_cone_to_touch(1.0, 0.0, 0.0, static_cast<double>(n - 1), subs[0].pts,
                                  subs[0].segs);
  double height = static_cast<double>(n - 1);

  for (int t = 0; t < l; ++t) {
    const LightSubtree& sub = subs[t];
    LightAllocation la;
    la.light_child = sub.child;
    la.parent = sub.parent;
    la.inner = cone;
    la.plane_z = height;
    la.inner_radius = cone_section_radius(cone, la.plane_z);

    Vec3 attach{0.0, 0.0, sub.plane_z};
    DistanceRange dr = distance_range(attach, sub.pts, sub.segs);
    if (dr.min <= kGeomEps)
      throw std::invalid_argument("space: light subtree touches the pole axis");
    la.closest_dist = dr.min;
    la.scale = la.inner_radius / la.closest_dist;
    double spread_t = dr.max / dr.min;

    // Recursive allocation for the lifted subtree.
    SubtreeRef ref = extract_subtree(tree, sub.child);
    auto child_alloc = std::make_unique<SpaceAllocation>();
    if (ref.tree->is_root_path()) {
      child_alloc->bounding =
          Cylinder{{0.0, 0.0, 0.0}, 1.0, static_cast<double>(ref.tree->vertex_count() - 1)};
    } else {
      Drawing3D slice = child_slice(tree, g1, sub, la.scale, ref);
      PathDecomposition child_decomp = decompose(*ref.tree, config.kind);
      auto [slice_norm, sim] = normalize_input(slice);
      Drawing3D child_g1 = step1_set_pole(slice_norm, child_decomp);
      *child_alloc = space(child_g1, child_decomp, config);
    }
    height += child_alloc->bounding.height;

    // Outer cone: separated from the inner cone by the spread and by the
    // global constant, then widened until it encloses the child volume.
    double s_outer = std::min(cone.slope / spread_t, cone.slope / config.c);
    const Vec3& u_pos = g1.position[sub.child];
    Vec3 lifted{la.scale * u_pos.x, la.scale * u_pos.y, la.plane_z};
    double slice_extent = 0.0;
    for (const Vec3& p : sub.pts)
      slice_extent = std::max(
          slice_extent, std::hypot(la.scale * p.x - lifted.x, la.scale * p.y - lifted.y));
    double cyl_radius = std::max(child_alloc->bounding.radius, slice_extent);
    la.child_cylinder = Cylinder{lifted, cyl_radius, child_alloc->bounding.height};

    double reach = hdist(lifted) + cyl_radius;
    if (reach > 0.0)
      s_outer = std::min(s_outer, (la.plane_z - cone.apex.z) / reach);
    la.outer = Cone{cone.apex, s_outer};
    la.outer_radius = cone_section_radius(la.outer, la.plane_z);

    if (t + 1 < l) {
      const LightSubtree& next = subs[t + 1];
      double next_parent_z = next.plane_z;
      double s_hat = s_outer;
      DistanceRange next_dr =
          distance_range({0.0, 0.0, next_parent_z}, next.pts, next.segs);
      // After sliding, the next cone's sections must strictly dominate the
      // current outer cone from the lift plane upward; the relative margin
      // keeps same-plane annuli (height-zero children) apart and the
      // absolute term keeps later lift fans clear of placed subtrees.
      double needed = la.outer_radius * (1.0 + config.safety_margin) + 1.0;
      if (needed > next_dr.min)
        s_hat = std::min(s_hat, (la.plane_z - next_parent_z) / (needed - next_dr.min));
      if (!(s_hat > 1e-300))
        throw std::runtime_error("space: cone slope underflow");
      cone = slide_cone_to_touch(s_hat, 0.0, 0.0, next_parent_z, next.pts, next.segs);
    }

    out.lights.push_back(la);
    out.children.push_back(std::move(child_alloc));
  }

  out.bounding = Cylinder{{0.0, 0.0, 0.0}, cone_section_radius(cone, height), height};
  return out;
}

Drawing3D step2_lift(const Drawing3D& g1, const PathDecomposition& decomp,
                     const SpaceAllocation& alloc) {
  const RootedTree& tree = *g1.tree;
  Drawing3D out = g1;
  for (const LightAllocation& la : alloc.lights) {
    for (int w : subtree_vertices(tree, la.light_child)) {
      const Vec3& p = g1.position[w];
      out.position[w] = {la.scale * p.x, la.scale * p.y, la.plane_z};
    }
  }
  return out;
}

Morph step3_recurse(const Drawing3D& g2, const PathDecomposition& decomp,
                    const MorphConfig& config, const SpaceAllocation& alloc) {
  const RootedTree& tree = *g2.tree;
  Morph combined;
  combined.keyframes.push_back(g2);

  struct Kid {
    SubtreeRef ref;
    Morph morph;
    Vec3 offset;
  };
  std::vector<Kid> kids;
  int max_steps = 0;
  for (size_t t = 0; t < alloc.lights.size(); ++t) {
    const LightAllocation& la = alloc.lights[t];
    Kid kid;
    kid.ref = extract_subtree(tree, la.light_child);
    kid.offset = g2.position[la.light_child];
    Drawing3D slice;
    slice.tree = kid.ref.tree;
    slice.position.resize(kid.ref.to_outer.size());
    for (int w : kid.ref.to_outer)
      slice.position[kid.ref.to_local[w]] = g2.position[w] - kid.offset;
    PathDecomposition child_decomp = decompose(*kid.ref.tree, config.kind);
    kid.morph = canonize_level(slice, child_decomp, config, alloc.children[t].get(), false);
    max_steps = std::max(max_steps, kid.morph.steps());
    kids.push_back(std::move(kid));
  }

  Drawing3D frame = g2;
  for (int s = 1; s <= max_steps; ++s) {
    for (const Kid& kid : kids) {
      const Drawing3D& kf = kid.morph.keyframes[std::min(s, kid.morph.steps())];
      for (size_t i = 0; i < kid.ref.to_outer.size(); ++i)
        frame.position[kid.ref.to_outer[i]] = kf.position[i] + kid.offset;
    }
    combined.push(frame);
  }
  return combined;
}

Morph step4_rotate(const Drawing3D& g3, const PathDecomposition& decomp,
                   const MorphConfig& config, const SpaceAllocation& alloc) {
  const RootedTree& tree = *g3.tree;
  int k = inscribed_polygon_order(config.c, config.safety_margin);
  double step_angle = 2.0 * M_PI / k;

  struct Plan {
    std::vector<int> verts;
    std::vector<Vec3> waypoints;  // positions for the attachment vertex
  };
  std::vector<Plan> plans;
  int max_count = 0;

  for (const LightAllocation& la : alloc.lights) {
    Plan plan;
    plan.verts = subtree_vertices(tree, la.light_child);
    const Vec3& cur = g3.position[la.light_child];
    double rho = std::hypot(cur.x, cur.y);
    double phi = std::atan2(cur.y, cur.x);
    double z = la.plane_z;
    double r_in = la.inner_radius;
    double r_out = la.outer_radius;
    double tol = 1e-12 * std::max(1.0, r_out);

    if (std::abs(phi) > 1e-12 || std::abs(rho - r_in) > tol) {
      auto at = [&](double radius, double angle) {
        return Vec3{radius * std::cos(angle), radius * std::sin(angle), z};
      };
      // Radially out to the polygon circle, around it toward angle zero along
      // the shorter route (ties counterclockwise), then radially in.
      std::vector<Vec3> wp;
      wp.push_back(at(r_out, phi));
      double sgn, total;
      if (phi > M_PI - 1e-12) {
        sgn = 1.0;
        total = 2.0 * M_PI - phi;
      } else if (phi >= 0.0) {
        sgn = -1.0;
        total = phi;
      } else {
        sgn = 1.0;
        total = -phi;
      }
      int hops = static_cast<int>(std::ceil(total / step_angle - 1e-12));
      for (int j = 1; j < hops; ++j) wp.push_back(at(r_out, phi + sgn * j * step_angle));
      if (total > 1e-12) wp.push_back(at(r_out, 0.0));
      wp.push_back(at(r_in, 0.0));
      // Drop consecutive duplicates.
      for (const Vec3& p : wp)
        if (plan.waypoints.empty() || dist(plan.waypoints.back(), p) > tol)
          plan.waypoints.push_back(p);
      if (!plan.waypoints.empty() && dist(cur, plan.waypoints.front()) <= tol)
        plan.waypoints.erase(plan.waypoints.begin());
    }
    max_count = std::max(max_count, static_cast<int>(plan.waypoints.size()));
    plans.push_back(std::move(plan));
  }

  Morph m;
  m.keyframes.push_back(g3);
  Drawing3D frame = g3;
  for (int s = 0; s < max_count; ++s) {
    for (size_t t = 0; t < plans.size(); ++t) {
      const Plan& plan = plans[t];
      if (s >= static_cast<int>(plan.waypoints.size())) continue;
      Vec3 offset = plan.waypoints[s] - frame.position[alloc.lights[t].light_child];
      for (int w : plan.verts) frame.position[w] += offset;
    }
    m.push(frame);
  }
  return m;
}

Drawing3D step5_go_down(const Drawing3D& g4, const PathDecomposition& decomp,
                        const SpaceAllocation& alloc) {
  const RootedTree& tree = *g4.tree;
  std::vector<int> dfs = dfs_positions(tree, decomp);
  Drawing3D out = g4;
  for (const LightAllocation& la : alloc.lights) {
    double dz = static_cast<double>(dfs[la.light_child]) - g4.position[la.light_child].z;
    for (int w : subtree_vertices(tree, la.light_child)) out.position[w].z += dz;
  }
  return out;
}

Drawing3D step6_go_left(const Drawing3D& g5, const PathDecomposition& decomp,
                        const SpaceAllocation& alloc) {
  const RootedTree& tree = *g5.tree;
  Drawing3D out = g5;
  for (const LightAllocation& la : alloc.lights) {
    const Vec3& cur = g5.position[la.light_child];
    Vec3 offset{1.0 - cur.x, -cur.y, 0.0};
    for (int w : subtree_vertices(tree, la.light_child)) out.position[w] += offset;
  }
  return out;
}

namespace {

// The single linear lift of every subtree at once can cross when the scale
// factor of a later light child outruns an earlier sibling's (the later edge
// sweeps radially through the still-small earlier subtree). We keep the
// single morph as a verified fast path, and otherwise lift in L order: one
// step per multi-vertex subtree, one shared step per run of consecutive
// leaves. A solo lift only grazes placed subtrees within a narrow radial
// band beyond their outer radius, which the allocation margin clears.
Morph build_lift_morph(const Drawing3D& g1, const PathDecomposition& decomp,
                       const MorphConfig& config, const SpaceAllocation& alloc) {
  const RootedTree& tree = *g1.tree;
  Drawing3D g2 = step2_lift(g1, decomp, alloc);

  Morph m;
  m.keyframes.push_back(g1);
  if (verify_linear_step(g1, g2, false).clean()) {
    m.push(g2);
    return m;
  }

  Drawing3D cur = g1;
  size_t t = 0;
  while (t < alloc.lights.size()) {
    std::vector<int> batch;
    if (tree.is_leaf(alloc.lights[t].light_child)) {
      while (t < alloc.lights.size() && tree.is_leaf(alloc.lights[t].light_child))
        batch.push_back(alloc.lights[t++].light_child);
    } else {
      batch.push_back(alloc.lights[t++].light_child);
    }
    Drawing3D next = cur;
    std::vector<char> moved(tree.vertex_count(), 0);
    for (int u : batch) {
      for (int w : subtree_vertices(tree, u)) {
        next.position[w] = g2.position[w];
        moved[w] = 1;
      }
    }
    CrossingReport rep = verify_linear_step_moving(cur, next, moved);
    if (!rep.clean())
      throw std::runtime_error("canonize: lift step failed verification (" + rep.detail + ")");
    m.push(next);
    cur = next;
  }
  return m;
}

Morph canonize_level(const Drawing3D& g, const PathDecomposition& decomp,
                     const MorphConfig& config, const SpaceAllocation* prealloc,
                     bool top_level) {
  const RootedTree& tree = *g.tree;
  Morph m;
  m.keyframes.push_back(g);

  Drawing3D canon = canonical_tree_drawing(g.tree, decomp);
  if (tree.is_root_path()) {
    // One linear morph suffices: the z order along the path separates edges
    // at every positive time.
    m.push(canon);
    return m;
  }

  auto [gn, sim] = normalize_input(g);
  m.push(gn);

  Drawing3D g1 = step1_set_pole(gn, decomp);
  m.push(g1);

  SpaceAllocation own;
  const SpaceAllocation* a = prealloc;
  if (a == nullptr) {
    own = space(g1, decomp, config);
    a = &own;
  }

  m.append(build_lift_morph(g1, decomp, config, *a));
  Drawing3D g2 = m.keyframes.back();

  Morph s3 = step3_recurse(g2, decomp, config, *a);
  m.append(s3);

  Morph s4 = step4_rotate(m.keyframes.back(), decomp, config, *a);
  m.append(s4);

  Drawing3D g5 = step5_go_down(m.keyframes.back(), decomp, *a);
  m.push(g5);

  Drawing3D g6 = step6_go_left(g5, decomp, *a);
  // The construction lands on the canonical grid up to float drift, which is
  // proportional to the radii traversed; snap the final keyframe to the
  // exact grid.
  double scale = 1.0;
  for (const Vec3& p : g5.position)
    scale = std::max({scale, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
  for (int v = 0; v < tree.vertex_count(); ++v) {
    if (dist(g6.position[v], canon.position[v]) > 1e-6 * scale)
      throw std::runtime_error("canonize: final keyframe missed the canonical drawing");
  }
  m.push(canon);
  return m;
}

}  // namespace

Morph canonize(const Drawing3D& g, const MorphConfig& config) {
  if (!g.tree) throw std::invalid_argument("canonize: drawing without a tree");
  if (!g.is_planar()) throw std::invalid_argument("canonize: input must be planar (z = 0)");
  CrossingReport r = verify_drawing(g);
  if (!r.clean())
    throw std::invalid_argument("canonize: input drawing is not crossing-free: " + r.detail);

  PathDecomposition decomp = decompose(*g.tree, config.kind);
  Morph m = canonize_level(g, decomp, config, nullptr, true);

  if (config.verify_each_step) {
    CrossingReport rep = verify_morph(m);
    if (!rep.clean())
      throw std::runtime_error("canonize: emitted step " + std::to_string(rep.step) +
                               " fails verification (" + rep.detail + ")");
  }
  return m;
}

Morph morph_between_planar(const Drawing3D& g1, const Drawing3D& g2, const MorphConfig& config) {
  if (g1.n() != g2.n())
    throw std::invalid_argument("morph_between_planar: drawings of different trees");
  Morph a = canonize(g1, config);
  Morph b = canonize(g2, config);
  Morph out = a;
  out.append(b.reversed());
  return out;
}

}  // namespace treemorph

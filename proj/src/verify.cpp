#include "treemorph/verify.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "treemorph/motion.hpp"

namespace treemorph {

double pair_tolerance(double coordinate_scale) {
  return kCrossEps * std::max(1.0, coordinate_scale);
}

namespace {

struct Hit {
  double t = 0.0;
  Vec3 witness;
  const char* what = "crossing";
};

double coord_scale(std::initializer_list<Vec3> pts) {
  double s = 0.0;
  for (const Vec3& p : pts)
    s = std::max({s, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
  return s;
}

// Componentwise contact predicate: the absolute tolerance applies at unit
// scale; for huge coordinates only a small multiple of the representable
// resolution is granted, so features that are exact in doubles (say a unit
// gap at a 1e12 offset) are not swamped. Each axis keeps its own precision.
inline constexpr double kRelEps = 1e-14;

bool close_component(double a, double b) {
  return std::abs(a - b) < std::max(kCrossEps, kRelEps * std::max(std::abs(a), std::abs(b)));
}

bool close_enough(const Vec3& p, const Vec3& q) {
  return close_component(p.x, q.x) && close_component(p.y, q.y) && close_component(p.z, q.z);
}

// Distance-based collinear-overlap test for two arms out of a shared vertex:
// a violation when the shorter arm's reach lies close to the other closed
// arm (covers coincident endpoints and zero-length arms). All tolerances are
// relative to the coordinates near the potential contact, so a short arm
// next to a far-flung one is not drowned by the pair's extent.
std::optional<Vec3> adjacent_overlap(const Vec3& w0, const Vec3& a0, const Vec3& b0) {
  // Parameters are computed on a scaled copy so squared terms cannot
  // overflow; contacts are judged componentwise on original coordinates.
  double s = coord_scale({w0, a0, b0});
  double inv = s > 1.0 ? 1.0 / s : 1.0;
  double unit = s > 1.0 ? s : 1.0;
  Vec3 w = w0 * inv, a = a0 * inv, b = b0 * inv;
  if (close_enough(w0, a0) || close_enough(w0, b0)) return w0;
  double la = dist(w, a), lb = dist(w, b);
  double reach = std::min(la, lb);
  double fa = reach / la;
  Vec3 p0 = lerp(w0, a0, fa);
  Vec3 p = w + (a - w) * fa;
  Vec3 ab = b - w;
  double len2 = norm2(ab);
  double tq = len2 > 0.0 ? std::clamp(dot(p - w, ab) / len2, 0.0, 1.0) : 0.0;
  Vec3 q0 = lerp(w0, b0, tq);
  if (close_enough(p0, q0)) return p0;
  (void)unit;
  return std::nullopt;
}

std::vector<double> clamp_times(std::vector<double> ts) {
  std::vector<double> out;
  for (double t : ts) {
    if (t < -kTimeEps || t > 1.0 + kTimeEps) continue;
    out.push_back(std::clamp(t, 0.0, 1.0));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double a, double b) { return std::abs(a - b) < 1e-12; }),
            out.end());
  return out;
}

// Earliest violation for an edge pair sharing the moving vertex `w`. The
// scaled copies drive the polynomial candidate search; violations are
// confirmed on the original coordinates with the tolerance of the
// configuration at that time.
std::optional<Hit> shared_pair_hit(const MovingPoint& w, const MovingPoint& a,
                                   const MovingPoint& b, const MovingPoint& ws,
                                   const MovingPoint& as, const MovingPoint& bs) {
  LinVec u1 = lin_diff(as, ws);
  LinVec u2 = lin_diff(bs, ws);

  std::vector<double> candidates{0.0, 0.5, 1.0};

  // Arm degeneracy: each |u|^2 is a quadratic in t.
  for (const LinVec* u : {&u1, &u2}) {
    Poly n2 = dot(*u, *u);
    for (double t : real_roots(n2.derivative(), 0.0, 1.0)) candidates.push_back(t);
  }

  LinVec cr = cross(u1, u2);
  bool all_zero = cr.x.degree() < 0 && cr.y.degree() < 0 && cr.z.degree() < 0;
  if (all_zero) {
    // Permanently parallel arms: a violation whenever they point the same way.
    Poly dp = dot(u1, u2);
    for (double t : real_roots(dp, 0.0, 1.0)) candidates.push_back(t);
  } else {
    for (const Poly* comp : {&cr.x, &cr.y, &cr.z})
      for (double t : real_roots(*comp, -kTimeEps, 1.0 + kTimeEps)) candidates.push_back(t);
  }
  candidates = clamp_times(std::move(candidates));

  std::optional<Hit> best;
  for (double t : candidates) {
    auto wpt = adjacent_overlap(w.at(t), a.at(t), b.at(t));
    if (wpt) {
      if (!best || t < best->t) best = Hit{t, *wpt, "adjacent edges overlap"};
    }
  }
  return best;
}

std::optional<Hit> static_disjoint_hit(const Vec3& A0, const Vec3& A1, const Vec3& B0,
                                       const Vec3& B1, double t) {
  double s = coord_scale({A0, A1, B0, B1});
  double inv = s > 1.0 ? 1.0 / s : 1.0;
  Vec3 a0 = A0 * inv, a1 = A1 * inv, b0 = B0 * inv, b1 = B1 * inv;

  // Coarse reject at the pair scale; parameters of the closest approach are
  // scale invariant, so they transfer to the original coordinates, where the
  // contact is judged componentwise.
  if (distance_segment_segment(a0, a1, b0, b1) >= kCrossEps) return std::nullopt;
  auto [sp, tp] = closest_segment_params(a0, a1, b0, b1);
  Vec3 hit_p = lerp(A0, A1, sp);
  Vec3 hit_q = lerp(B0, B1, tp);
  if (!close_enough(hit_p, hit_q)) return std::nullopt;
  return Hit{t, (hit_p + hit_q) * 0.5, "edges cross"};
}

// Earliest violation for a vertex-disjoint pair of moving edges. Scaled
// copies generate candidate times; hits are confirmed on the originals.
std::optional<Hit> disjoint_pair_hit(const MovingPoint& A, const MovingPoint& B,
                                     const MovingPoint& C, const MovingPoint& D,
                                     const MovingPoint& As, const MovingPoint& Bs,
                                     const MovingPoint& Cs, const MovingPoint& Ds,
                                     double scale) {
  LinVec e1 = lin_diff(Bs, As);
  LinVec rCA = lin_diff(Cs, As);
  LinVec rDA = lin_diff(Ds, As);

  // Coplanarity determinant det[B-A, C-A, D-A](t): a cubic in t.
  Poly det = dot(cross(e1, rCA), rDA);
  double det_scale = std::max(1.0, scale * scale * scale);

  std::vector<double> candidates;
  if (det.max_abs_coeff() > 1e-12 * det_scale) {
    double c0 = det.c.size() > 0 ? det.c[0] : 0.0;
    double c1 = det.c.size() > 1 ? det.c[1] : 0.0;
    double c2 = det.c.size() > 2 ? det.c[2] : 0.0;
    double c3 = det.c.size() > 3 ? det.c[3] : 0.0;
    candidates = clamp_times(solve_cubic(c3, c2, c1, c0));
  } else {
    // Persistently coplanar pair: between the roots of the two straddle
    // quartics the intersection status is constant, so interval midpoints
    // (plus the breakpoints) decide.
    LinVec e2 = lin_diff(Ds, Cs);
    LinVec rAC = lin_diff(As, Cs);
    LinVec rBC = lin_diff(Bs, Cs);
    Poly g1 = dot(cross(e1, rCA), cross(e1, rDA));
    Poly g2 = dot(cross(e2, rAC), cross(e2, rBC));

    std::vector<double> brk;
    if (g1.degree() < 0 && g2.degree() < 0) {
      // Collinear throughout; break at projection-parameter sign changes.
      Poly projections[4] = {dot(rCA, e1), dot(rDA, e1), dot(lin_diff(Cs, Bs), e1),
                             dot(lin_diff(Ds, Bs), e1)};
      for (const Poly& q : projections)
        for (double t : real_roots(q, 0.0, 1.0)) brk.push_back(t);
    } else {
      for (const Poly* q : {&g1, &g2})
        for (double t : real_roots(*q, 0.0, 1.0)) brk.push_back(t);
    }
    brk.push_back(0.0);
    brk.push_back(1.0);
    brk = clamp_times(std::move(brk));
    for (size_t i = 0; i + 1 < brk.size(); ++i) {
      candidates.push_back(brk[i]);
      candidates.push_back(0.5 * (brk[i] + brk[i + 1]));
    }
    if (!brk.empty()) candidates.push_back(brk.back());
    candidates = clamp_times(std::move(candidates));
  }

  std::optional<Hit> best;
  for (double t : candidates) {
    auto hit = static_disjoint_hit(A.at(t), B.at(t), C.at(t), D.at(t), t);
    if (hit && (!best || hit->t < best->t)) best = hit;
  }
  return best;
}

struct EdgeEnds {
  int u, v;
};

std::vector<EdgeEnds> edge_list(const RootedTree& tree) {
  std::vector<EdgeEnds> e;
  e.reserve(tree.edge_count());
  for (auto [child, parent] : tree.edges()) e.push_back({child, parent});
  return e;
}

struct Box {
  Vec3 lo, hi;
  bool overlaps(const Box& o, double margin) const {
    return lo.x - margin <= o.hi.x && o.lo.x - margin <= hi.x && lo.y - margin <= o.hi.y &&
           o.lo.y - margin <= hi.y && lo.z - margin <= o.hi.z && o.lo.z - margin <= hi.z;
  }
};

Box swept_box(const MovingPoint& a, const MovingPoint& b) {
  Box box{a.p0, a.p0};
  for (const Vec3& p : {a.p1, b.p0, b.p1}) {
    box.lo.x = std::min(box.lo.x, p.x);
    box.lo.y = std::min(box.lo.y, p.y);
    box.lo.z = std::min(box.lo.z, p.z);
    box.hi.x = std::max(box.hi.x, p.x);
    box.hi.y = std::max(box.hi.y, p.y);
    box.hi.z = std::max(box.hi.z, p.z);
  }
  return box;
}

// Large coordinates are brought to unit scale per pair so squared terms in
// the polynomials cannot overflow; verdicts are scale invariant.
MovingPoint scaled(const MovingPoint& p, double inv) {
  return {p.p0 * inv, p.p1 * inv};
}

struct StepContext {
  const Drawing3D* from;
  const Drawing3D* to;
  std::vector<EdgeEnds> edges;
  std::vector<MovingPoint> mu, mv;
  std::vector<Box> boxes;

  StepContext(const Drawing3D& f, const Drawing3D& t) : from(&f), to(&t) {
    edges = edge_list(*f.tree);
    int m = static_cast<int>(edges.size());
    mu.resize(m);
    mv.resize(m);
    boxes.resize(m);
    for (int i = 0; i < m; ++i) {
      mu[i] = {f.position[edges[i].u], t.position[edges[i].u]};
      mv[i] = {f.position[edges[i].v], t.position[edges[i].v]};
      boxes[i] = swept_box(mu[i], mv[i]);
    }
  }

  // Degeneracy of one edge across the step, judged at each candidate time
  // against the configuration scale there.
  std::optional<Hit> edge_degenerate(int i) const {
    double s = coord_scale({mu[i].p0, mu[i].p1, mv[i].p0, mv[i].p1});
    double inv = s > 1.0 ? 1.0 / s : 1.0;
    LinVec e = lin_diff(scaled(mv[i], inv), scaled(mu[i], inv));
    Poly n2 = dot(e, e);
    std::vector<double> cand = clamp_times(real_roots(n2.derivative(), 0.0, 1.0));
    cand.push_back(0.0);
    cand.push_back(1.0);
    for (double t : cand) {
      Vec3 a = mu[i].at(t), b = mv[i].at(t);
      if (close_enough(a, b)) return Hit{t, a, "degenerate edge during step"};
    }
    return std::nullopt;
  }

  bool edge_static(int i) const {
    return mu[i].p0 == mu[i].p1 && mv[i].p0 == mv[i].p1;
  }

  std::optional<Hit> pair_hit(int i, int j) const {
    double s = coord_scale({mu[i].p0, mu[i].p1, mv[i].p0, mv[i].p1, mu[j].p0, mu[j].p1, mv[j].p0,
                            mv[j].p1});
    double tol = pair_tolerance(s);
    if (!boxes[i].overlaps(boxes[j], tol)) return std::nullopt;

    double inv = s > 1.0 ? 1.0 / s : 1.0;

    // Fully static pairs need no polynomial machinery.
    if (edge_static(i) && edge_static(j)) {
      int sh = -1;
      if (edges[i].u == edges[j].u || edges[i].u == edges[j].v) sh = edges[i].u;
      else if (edges[i].v == edges[j].u || edges[i].v == edges[j].v) sh = edges[i].v;
      if (sh == -1)
        return static_disjoint_hit(mu[i].p0, mv[i].p0, mu[j].p0, mv[j].p0, 0.0);
      int wi = edges[i].u == sh ? edges[i].v : edges[i].u;
      int wj = edges[j].u == sh ? edges[j].v : edges[j].u;
      auto w = adjacent_overlap(from->position[sh], from->position[wi], from->position[wj]);
      if (w) return Hit{0.0, *w, "adjacent edges overlap"};
      return std::nullopt;
    }

    int shared = -1;
    if (edges[i].u == edges[j].u || edges[i].u == edges[j].v) shared = edges[i].u;
    else if (edges[i].v == edges[j].u || edges[i].v == edges[j].v) shared = edges[i].v;

    std::optional<Hit> hit;
    if (shared == -1) {
      hit = disjoint_pair_hit(mu[i], mv[i], mu[j], mv[j], scaled(mu[i], inv), scaled(mv[i], inv),
                              scaled(mu[j], inv), scaled(mv[j], inv), s * inv);
    } else {
      int wi = edges[i].u == shared ? edges[i].v : edges[i].u;
      int wj = edges[j].u == shared ? edges[j].v : edges[j].u;
      MovingPoint w{from->position[shared], to->position[shared]};
      MovingPoint a{from->position[wi], to->position[wi]};
      MovingPoint b{from->position[wj], to->position[wj]};
      hit = shared_pair_hit(w, a, b, scaled(w, inv), scaled(a, inv), scaled(b, inv));
    }
    return hit;
  }
};

CrossingReport report_hit(const Hit& h, int i, int j) {
  CrossingReport rep;
  rep.status = CrossingReport::Status::Violation;
  rep.time = h.t;
  rep.edge_a = i;
  rep.edge_b = j;
  rep.witness = h.witness;
  rep.detail = h.what;
  return rep;
}

}  // namespace

CrossingReport verify_drawing(const Drawing3D& d) {
  if (!d.tree) throw std::invalid_argument("verify_drawing: drawing without a tree");
  StepContext ctx(d, d);
  int m = static_cast<int>(ctx.edges.size());
  for (int i = 0; i < m; ++i) {
    auto h = ctx.edge_degenerate(i);
    if (h) {
      CrossingReport rep = report_hit(*h, i, i);
      rep.time = 0.0;
      rep.detail = "degenerate edge (coincident adjacent vertices)";
      return rep;
    }
  }

  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto h = ctx.pair_hit(i, j);
      if (h) {
        CrossingReport rep = report_hit(*h, i, j);
        rep.time = 0.0;
        return rep;
      }
    }
  return CrossingReport::ok();
}

CrossingReport verify_linear_step(const Drawing3D& from, const Drawing3D& to,
                                  bool check_endpoints) {
  if (from.n() != to.n())
    throw std::invalid_argument("verify_linear_step: drawings over different trees");

  if (check_endpoints) {
    CrossingReport r0 = verify_drawing(from);
    if (!r0.clean()) {
      r0.time = 0.0;
      return r0;
    }
    CrossingReport r1 = verify_drawing(to);
    if (!r1.clean()) {
      r1.time = 1.0;
      return r1;
    }
  }

  StepContext ctx(from, to);
  int m = static_cast<int>(ctx.edges.size());

  std::optional<Hit> best;
  int best_i = -1, best_j = -1;
  auto consider = [&](std::optional<Hit> h, int i, int j) {
    if (h && (!best || h->t < best->t)) {
      best = h;
      best_i = i;
      best_j = j;
    }
  };

  for (int i = 0; i < m; ++i) consider(ctx.edge_degenerate(i), i, i);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) consider(ctx.pair_hit(i, j), i, j);

  if (best) return report_hit(*best, best_i, best_j);
  return CrossingReport::ok();
}

CrossingReport verify_linear_step_edge(const Drawing3D& from, const Drawing3D& to,
                                       int focus_edge) {
  StepContext ctx(from, to);
  int m = static_cast<int>(ctx.edges.size());
  if (focus_edge < 0 || focus_edge >= m)
    throw std::out_of_range("verify_linear_step_edge: bad edge id");

  std::optional<Hit> best;
  int best_i = -1, best_j = -1;
  auto consider = [&](std::optional<Hit> h, int i, int j) {
    if (h && (!best || h->t < best->t)) {
      best = h;
      best_i = i;
      best_j = j;
    }
  };
  consider(ctx.edge_degenerate(focus_edge), focus_edge, focus_edge);
  for (int j = 0; j < m; ++j) {
    if (j == focus_edge) continue;
    int i = std::min(focus_edge, j), jj = std::max(focus_edge, j);
    consider(ctx.pair_hit(i, jj), i, jj);
  }
  if (best) return report_hit(*best, best_i, best_j);
  return CrossingReport::ok();
}

CrossingReport verify_linear_step_moving(const Drawing3D& from, const Drawing3D& to,
                                         const std::vector<char>& vertex_moved) {
  StepContext ctx(from, to);
  int m = static_cast<int>(ctx.edges.size());
  auto involved = [&](int e) {
    return vertex_moved[ctx.edges[e].u] || vertex_moved[ctx.edges[e].v];
  };

  std::optional<Hit> best;
  int best_i = -1, best_j = -1;
  auto consider = [&](std::optional<Hit> h, int i, int j) {
    if (h && (!best || h->t < best->t)) {
      best = h;
      best_i = i;
      best_j = j;
    }
  };
  for (int i = 0; i < m; ++i)
    if (involved(i)) consider(ctx.edge_degenerate(i), i, i);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (!involved(i) && !involved(j)) continue;
      consider(ctx.pair_hit(i, j), i, j);
    }
  if (best) return report_hit(*best, best_i, best_j);
  return CrossingReport::ok();
}

CrossingReport verify_morph(const Morph& m) {
  if (m.keyframes.empty()) throw std::invalid_argument("verify_morph: empty morph");

  for (size_t k = 0; k < m.keyframes.size(); ++k) {
    CrossingReport r = verify_drawing(m.keyframes[k]);
    if (!r.clean()) {
      r.step = static_cast<int>(k);
      r.time = 0.0;
      return r;
    }
  }
  for (size_t k = 0; k + 1 < m.keyframes.size(); ++k) {
    CrossingReport r = verify_linear_step(m.keyframes[k], m.keyframes[k + 1], false);
    if (!r.clean()) {
      r.step = static_cast<int>(k);
      return r;
    }
  }
  return CrossingReport::ok();
}

}  // namespace treemorph

#include "treemorph/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace treemorph {

int Poly::degree() const {
  double m = max_abs_coeff();
  double tol = m * 1e-14;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (std::abs(c[i]) > tol) return i;
  return -1;
}

double Poly::eval(double t) const {
  double v = 0.0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * t + c[i];
  return v;
}

Poly Poly::derivative() const {
  if (c.size() <= 1) return Poly{{0.0}};
  std::vector<double> d(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
  return Poly{std::move(d)};
}

double Poly::max_abs_coeff() const {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

bool Poly::is_zero(double rel_tol) const {
  (void)rel_tol;
  return max_abs_coeff() == 0.0 || degree() < 0;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<double> r(std::max(a.c.size(), b.c.size()), 0.0);
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return Poly{std::move(r)};
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<double> r(std::max(a.c.size(), b.c.size()), 0.0);
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return Poly{std::move(r)};
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c.empty() || b.c.empty()) return Poly{{0.0}};
  std::vector<double> r(a.c.size() + b.c.size() - 1, 0.0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return Poly{std::move(r)};
}

namespace {

double newton_polish(const Poly& p, const Poly& dp, double t, double lo, double hi) {
  for (int i = 0; i < 6; ++i) {
    double f = p.eval(t);
    double d = dp.eval(t);
    if (d == 0.0) break;
    double t2 = t - f / d;
    if (!(t2 >= lo - 1e-6 && t2 <= hi + 1e-6)) break;
    t = t2;
  }
  return t;
}

// Bisect on an interval where p is monotone and changes sign.
double bisect_root(const Poly& p, double a, double b) {
  double fa = p.eval(a);
  for (int i = 0; i < 200; ++i) {
    double m = 0.5 * (a + b);
    double fm = p.eval(m);
    if (fm == 0.0) return m;
    if ((fa < 0.0) == (fm < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
    if (b - a < 1e-16 * std::max(1.0, std::abs(a))) break;
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<double> real_roots(const Poly& p, double lo, double hi) {
  std::vector<double> roots;
  int deg = p.degree();
  if (deg <= 0) return roots;

  double scale = p.max_abs_coeff();
  double value_tol = scale * 1e-12;

  if (deg == 1) {
    double r = -p.c[0] / p.c[1];
    if (r >= lo && r <= hi) roots.push_back(r);
    return roots;
  }
  if (deg == 2) {
    double a = p.c[2], b = p.c[1], cc = p.c[0];
    double disc = b * b - 4.0 * a * cc;
    if (disc >= 0.0) {
      double sq = std::sqrt(disc);
      double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
      double r1 = q / a;
      double r2 = q != 0.0 ? cc / q : r1;
      if (r1 > r2) std::swap(r1, r2);
      if (r1 >= lo && r1 <= hi) roots.push_back(r1);
      if (r2 >= lo && r2 <= hi && r2 != r1) roots.push_back(r2);
    }
    return roots;
  }

  Poly dp = p.derivative();
  std::vector<double> crit = real_roots(dp, lo, hi);
  std::vector<double> pts;
  pts.push_back(lo);
  for (double t : crit)
    if (t > pts.back() + 1e-15) pts.push_back(t);
  if (hi > pts.back()) pts.push_back(hi);

  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    double a = pts[i], b = pts[i + 1];
    double fa = p.eval(a), fb = p.eval(b);
    if (std::abs(fa) <= value_tol) {
      if (roots.empty() || a > roots.back() + 1e-12) roots.push_back(a);
      continue;
    }
    if ((fa < 0.0) != (fb < 0.0)) {
      double r = bisect_root(p, a, b);
      r = newton_polish(p, dp, r, a, b);
      if (roots.empty() || r > roots.back() + 1e-12) roots.push_back(r);
    }
  }
  double fend = p.eval(pts.back());
  if (std::abs(fend) <= value_tol && (roots.empty() || pts.back() > roots.back() + 1e-12))
    roots.push_back(pts.back());
  return roots;
}

std::vector<double> solve_cubic(double c3, double c2, double c1, double c0) {
  double scale = std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
  std::vector<double> roots;
  if (scale == 0.0) return roots;

  if (std::abs(c3) <= scale * 1e-14) {
    Poly q{{c0, c1, c2}};
    return real_roots(q, -1e18, 1e18);
  }

  // Depressed form via x^3 + a x^2 + b x + c.
  double a = c2 / c3, b = c1 / c3, c = c0 / c3;
  double a2 = a * a;
  double q = (a2 - 3.0 * b) / 9.0;
  double r = (a * (2.0 * a2 - 9.0 * b) + 27.0 * c) / 54.0;
  double r2 = r * r;
  double q3 = q * q * q;

  if (r2 < q3) {
    double t = r / std::sqrt(q3);
    t = std::clamp(t, -1.0, 1.0);
    t = std::acos(t);
    double m = -2.0 * std::sqrt(q);
    roots.push_back(m * std::cos(t / 3.0) - a / 3.0);
    roots.push_back(m * std::cos((t + 2.0 * M_PI) / 3.0) - a / 3.0);
    roots.push_back(m * std::cos((t - 2.0 * M_PI) / 3.0) - a / 3.0);
  } else {
    double u3 = -r - std::copysign(std::sqrt(std::max(0.0, r2 - q3)), r >= 0 ? 1.0 : -1.0);
    // Keep the sign handling explicit: u3 = -r - sign(r)*sqrt(r2-q3).
    u3 = -r - (r >= 0 ? 1.0 : -1.0) * std::sqrt(std::max(0.0, r2 - q3));
    double u = std::cbrt(u3);
    double v = u == 0.0 ? 0.0 : q / u;
    roots.push_back(u + v - a / 3.0);
    double t_imag = 0.5 * std::sqrt(3.0) * (u - v);
    if (std::abs(t_imag) < 1e-12 * std::max(1.0, std::abs(u) + std::abs(v))) {
      double rr = -0.5 * (u + v) - a / 3.0;
      roots.push_back(rr);
    }
  }

  Poly p{{c0, c1, c2, c3}};
  Poly dp = p.derivative();
  for (double& t : roots) t = newton_polish(p, dp, t, t - 1.0, t + 1.0);
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double t : roots)
    if (out.empty() || t > out.back() + 1e-12 * std::max(1.0, std::abs(t))) out.push_back(t);
  return out;
}

}  // namespace treemorph

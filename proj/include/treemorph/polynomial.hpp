#pragma once

#include <vector>

namespace treemorph {

// Dense polynomial, coefficients in increasing degree order.
struct Poly {
  std::vector<double> c;

  Poly() = default;
  explicit Poly(std::vector<double> coeffs) : c(std::move(coeffs)) {}

  int degree() const;
  double eval(double t) const;
  Poly derivative() const;
  double max_abs_coeff() const;
  bool is_zero(double rel_tol = 1e-13) const;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

// All real roots of p in [lo, hi], ascending, deduplicated. Monotone-interval
// bisection over the derivative's root partition; arbitrary (small) degree.
std::vector<double> real_roots(const Poly& p, double lo, double hi);

// Real roots of c3 t^3 + c2 t^2 + c1 t + c0 via discriminant classification
// (trigonometric / Cardano branches) followed by a Newton polish. Degenerate
// leading coefficients reduce the degree.
std::vector<double> solve_cubic(double c3, double c2, double c1, double c0);

}  // namespace treemorph

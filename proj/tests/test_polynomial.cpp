#include <cmath>

#include "doctest.h"
#include "treemorph/polynomial.hpp"

using namespace treemorph;

namespace {

bool contains(const std::vector<double>& roots, double r, double tol = 1e-9) {
  for (double x : roots)
    if (std::abs(x - r) < tol) return true;
  return false;
}

}  // namespace

TEST_CASE("cubic solver") {
  SUBCASE("three distinct roots") {
    // (t-1)(t-2)(t-3) = t^3 - 6t^2 + 11t - 6
    auto r = solve_cubic(1, -6, 11, -6);
    REQUIRE(r.size() == 3);
    CHECK(contains(r, 1));
    CHECK(contains(r, 2));
    CHECK(contains(r, 3));
  }
  SUBCASE("one real root") {
    // (t-2)(t^2+1)
    auto r = solve_cubic(1, -2, 1, -2);
    REQUIRE(r.size() == 1);
    CHECK(contains(r, 2));
  }
  SUBCASE("double root") {
    // (t-1)^2 (t-4)
    auto r = solve_cubic(1, -6, 9, -4);
    CHECK(contains(r, 1, 1e-6));
    CHECK(contains(r, 4, 1e-6));
  }
  SUBCASE("triple root") {
    auto r = solve_cubic(1, -3, 3, -1);
    CHECK(contains(r, 1, 1e-4));
  }
  SUBCASE("degenerate leading coefficients") {
    auto r = solve_cubic(0, 1, -3, 2);  // (t-1)(t-2)
    CHECK(contains(r, 1));
    CHECK(contains(r, 2));
    r = solve_cubic(0, 0, 2, -4);
    REQUIRE(r.size() == 1);
    CHECK(contains(r, 2));
    CHECK(solve_cubic(0, 0, 0, 5).empty());
    CHECK(solve_cubic(0, 0, 0, 0).empty());
  }
}

TEST_CASE("real root isolation for higher degrees") {
  SUBCASE("quartic with four roots") {
    // (t^2-1)(t^2-4) = t^4 - 5t^2 + 4
    Poly p{{4, 0, -5, 0, 1}};
    auto r = real_roots(p, -3, 3);
    REQUIRE(r.size() == 4);
    CHECK(contains(r, -2));
    CHECK(contains(r, -1));
    CHECK(contains(r, 1));
    CHECK(contains(r, 2));
  }
  SUBCASE("quartic tangency") {
    // (t-0.5)^2 >= 0, embedded in degree 4: (t-0.5)^2 (t^2+1)
    Poly p = Poly{{0.25, -1, 1}} * Poly{{1, 0, 1}};
    auto r = real_roots(p, 0, 1);
    CHECK(!r.empty());
    CHECK(contains(r, 0.5, 1e-5));
  }
  SUBCASE("quintic") {
    // t(t-0.2)(t-0.4)(t-0.6)(t-0.8)
    Poly p{{1}};
    for (double root : {0.0, 0.2, 0.4, 0.6, 0.8}) p = p * Poly{{-root, 1}};
    auto r = real_roots(p, -0.1, 1.0);
    REQUIRE(r.size() == 5);
    for (double root : {0.0, 0.2, 0.4, 0.6, 0.8}) CHECK(contains(r, root, 1e-8));
  }
  SUBCASE("window filtering") {
    Poly p{{-6, 11, -6, 1}};
    auto r = real_roots(p, 1.5, 2.5);
    REQUIRE(r.size() == 1);
    CHECK(contains(r, 2));
  }
}

TEST_CASE("polynomial arithmetic") {
  Poly a{{1, 2}};        // 1 + 2t
  Poly b{{0, 0, 3}};     // 3t^2
  Poly c = a * b;
  CHECK(c.eval(2.0) == doctest::Approx((1 + 4) * 12));
  Poly d = a + b;
  CHECK(d.eval(1.0) == doctest::Approx(6.0));
  CHECK(d.derivative().eval(1.0) == doctest::Approx(2 + 6));
  CHECK(Poly{{0.0, 0.0}}.degree() < 0);
}

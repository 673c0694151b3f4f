#include <cmath>

#include "doctest.h"
#include "treemorph/geometry.hpp"

using namespace treemorph;

TEST_CASE("cone section radius") {
  Cone unit{{0, 0, 0}, 1.0};
  CHECK(cone_section_radius(unit, 5.0) == doctest::Approx(5.0));
  Cone steep{{0, 0, 2}, 2.0};
  CHECK(cone_section_radius(steep, 4.0) == doctest::Approx(1.0));
  CHECK(cone_section_radius(unit, 0.0) == doctest::Approx(0.0));
  CHECK_THROWS(cone_section_radius(unit, -1.0));
}

TEST_CASE("point outside cone") {
  Cone c{{0, 0, 0}, 1.0};
  CHECK(point_outside_cone(c, {2, 0, 1}));
  CHECK(!point_outside_cone(c, {0.5, 0, 1}));
  CHECK(!point_outside_cone(c, {1, 0, 1}));  // boundary counts as inside
  CHECK(point_outside_cone(c, {0, 0, -1}));  // below the apex
}

TEST_CASE("minimum distance from a point to segments") {
  std::vector<Segment> segs{{{1, 0, 0}, {1, 1, 0}}};
  CHECK(min_distance_point_to_segments({0, 0, 0}, segs) == doctest::Approx(1.0));
  segs = {{{-1, 1, 0}, {1, 1, 0}}};
  CHECK(min_distance_point_to_segments({0, 0, 0}, segs) == doctest::Approx(1.0));
  segs = {{{-1, 0, 0}, {1, 0, 0}}};
  CHECK(min_distance_point_to_segments({0.25, 0, 0}, segs) == doctest::Approx(0.0));
  CHECK_THROWS(min_distance_point_to_segments({0, 0, 0}, {}));
}

TEST_CASE("spread") {
  Vec3 center{0, 0, 0};
  SUBCASE("single point") {
    std::vector<Vec3> pts{{2, 0, 0}};
    CHECK(spread(center, pts, {}) == doctest::Approx(1.0));
  }
  SUBCASE("two points") {
    std::vector<Vec3> pts{{1, 0, 0}, {0, 3, 0}};
    CHECK(spread(center, pts, {}) == doctest::Approx(3.0));
  }
  SUBCASE("segment with an interior foot") {
    // Closest point of the segment is the perpendicular foot at distance 1;
    // the far endpoint sits at distance 2.
    std::vector<Segment> segs{{{1, 0, 0}, {1, std::sqrt(3.0), 0}}};
    CHECK(spread(center, {}, segs) == doctest::Approx(2.0));
  }
  SUBCASE("degenerate annulus") {
    std::vector<Vec3> pts{{0, 0, 0}};
    CHECK_THROWS(spread(center, pts, {}));
  }
}

TEST_CASE("slide cone to touch") {
  SUBCASE("single point lands on the boundary") {
    std::vector<Vec3> pts{{1, 0, 0}};
    Cone c = slide_cone_to_touch(1.0, 0, 0, 10.0, pts, {});
    CHECK(c.apex.z == doctest::Approx(-1.0));
    CHECK(cone_section_radius(c, 0.0) == doctest::Approx(1.0));
  }
  SUBCASE("the binding constraint wins") {
    std::vector<Vec3> pts{{1, 0, 0}, {2, 0, 0}};
    Cone c = slide_cone_to_touch(1.0, 0, 0, 10.0, pts, {});
    CHECK(c.apex.z == doctest::Approx(-1.0));
    // Nothing strictly inside.
    for (const Vec3& p : pts)
      CHECK(axis_distance(c, p) >= cone_section_radius(c, p.z) - 1e-9);
  }
  SUBCASE("no constraints keep the initial apex") {
    Cone c = slide_cone_to_touch(1.0, 0, 0, 7.5, {}, {});
    CHECK(c.apex.z == doctest::Approx(7.5));
  }
  SUBCASE("segment interiors constrain the cone") {
    std::vector<Segment> segs{{{2, -1, 0}, {2, 1, 0}}};
    Cone c = slide_cone_to_touch(1.0, 0, 0, 10.0, {}, segs);
    CHECK(c.apex.z == doctest::Approx(-2.0));
  }
  SUBCASE("drawing on the axis is rejected") {
    std::vector<Vec3> pts{{0, 0, 3}};
    CHECK_THROWS(slide_cone_to_touch(1.0, 0, 0, 10.0, pts, {}));
  }
  SUBCASE("lowering the apex pulls the touching point strictly inside") {
    std::vector<Vec3> pts{{1.5, 0, 0.25}};
    Cone c = slide_cone_to_touch(0.5, 0, 0, 10.0, pts, {});
    Cone lower{{0, 0, c.apex.z - 1e-3}, c.slope};
    CHECK(axis_distance(lower, pts[0]) < cone_section_radius(lower, pts[0].z));
  }
}

TEST_CASE("inscribed polygon order") {
  CHECK(inscribed_polygon_order(2.0, 0.05) == 4);
  CHECK(inscribed_polygon_order(10.0, 0.05) == 3);
  // k grows without bound as c approaches 1, and the k-gon inscribed in the
  // outer circle always clears the inner circle.
  int prev = 3;
  for (double c : {1.5, 1.2, 1.1, 1.05, 1.01}) {
    int k = inscribed_polygon_order(c, 0.0);
    CHECK(k >= prev);
    prev = k;
    CHECK(std::cos(M_PI / k) > 1.0 / c);
  }
  CHECK(prev > 20);
  CHECK_THROWS(inscribed_polygon_order(1.0, 0.05));
}

TEST_CASE("segment-segment distance") {
  CHECK(distance_segment_segment({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}) ==
        doctest::Approx(1.0));
  CHECK(distance_segment_segment({0, 0, 0}, {1, 0, 0}, {0.5, -1, 0}, {0.5, 1, 0}) ==
        doctest::Approx(0.0));
  CHECK(distance_segment_segment({0, 0, 0}, {1, 0, 0}, {2, 0, 1}, {3, 0, 1}) ==
        doctest::Approx(std::sqrt(2.0)));
}

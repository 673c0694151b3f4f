#include <algorithm>

#include "doctest.h"
#include "support/oracles.hpp"
#include "support/tree_enum.hpp"
#include "treemorph/canonical.hpp"
#include "treemorph/generators.hpp"
#include "treemorph/verify.hpp"

using namespace treemorph;

TEST_CASE("canonical path drawing") {
  Drawing3D d1 = canonical_path_drawing(1);
  CHECK(d1.position[0] == Vec3{0, 0, 0});

  Drawing3D d3 = canonical_path_drawing(3);
  for (int i = 0; i < 3; ++i) CHECK(d3.position[i] == Vec3{0, 0, static_cast<double>(i)});

  Drawing3D d26 = canonical_path_drawing(26);
  for (int i = 0; i < 26; ++i) CHECK(d26.position[i].z == doctest::Approx(i));
}

TEST_CASE("canonical tree drawing of the star") {
  auto t = make_star(3);
  auto d = heavy_path_decomposition(*t);
  Drawing3D c = canonical_tree_drawing(t, d);
  CHECK(c.position[0] == Vec3{0, 0, 0});
  CHECK(c.position[2] == Vec3{1, 0, 1});
  CHECK(c.position[3] == Vec3{1, 0, 2});
  // Heavy child height is |T(root)| - |T(heavy)| = 4 - 1 = 3.
  CHECK(c.position[1] == Vec3{0, 0, 3});
}

TEST_CASE("canonical drawing of a path tree equals the canonical path drawing") {
  auto t = make_path_tree(4);
  auto d = heavy_path_decomposition(*t);
  Drawing3D c = canonical_tree_drawing(t, d);
  Drawing3D p = canonical_path_drawing(4);
  for (int i = 0; i < 4; ++i) CHECK(c.position[i] == p.position[i]);
}

TEST_CASE("closed form agrees with the incremental construction") {
  std::vector<std::shared_ptr<const RootedTree>> trees{
      make_star(3), make_caterpillar(9), make_binary_tree(15),
      make_random_tree(33, 5), make_random_tree(64, 11), make_random_tree(64, 12)};
  for (const auto& t : trees) {
    for (auto kind : {DecompositionKind::Heavy, DecompositionKind::Strahler}) {
      auto d = decompose(*t, kind);
      Drawing3D closed = canonical_tree_drawing(t, d);
      Drawing3D incremental = testsupport::incremental_canonical(t, d);
      for (int v = 0; v < t->vertex_count(); ++v) {
        CAPTURE(v);
        CHECK(closed.position[v].x == doctest::Approx(incremental.position[v].x));
        CHECK(closed.position[v].y == doctest::Approx(incremental.position[v].y));
        CHECK(closed.position[v].z == doctest::Approx(incremental.position[v].z));
      }
    }
  }
}

TEST_CASE("grid check") {
  SUBCASE("paths pass with width 0") {
    auto t = make_path_tree(9);
    auto d = heavy_path_decomposition(*t);
    auto g = canonical_grid_check(canonical_tree_drawing(t, d), d);
    CHECK(g.ok);
    CHECK(g.width == 0);
  }
  SUBCASE("star passes with width 1") {
    auto t = make_star(3);
    auto d = heavy_path_decomposition(*t);
    auto g = canonical_grid_check(canonical_tree_drawing(t, d), d);
    CHECK(g.ok);
    CHECK(g.width == 1);
  }
  SUBCASE("off-plane vertex fails") {
    auto t = make_star(3);
    auto d = heavy_path_decomposition(*t);
    Drawing3D c = canonical_tree_drawing(t, d);
    c.position[2].y = 0.5;
    CHECK(!canonical_grid_check(c, d).ok);
  }
}

TEST_CASE("canonical drawings are crossing-free with permuted z") {
  for (uint64_t seed : {1, 2, 3}) {
    auto t = make_random_tree(128, seed);
    auto d = heavy_path_decomposition(*t);
    Drawing3D c = canonical_tree_drawing(t, d);
    CHECK(canonical_grid_check(c, d).ok);
    CHECK(verify_drawing(c).clean());
  }
}

TEST_CASE("strahler canonical width is the Strahler number minus one") {
  for (int n = 2; n <= 9; ++n) {
    for (const auto& t : testsupport::all_rooted_trees(n)) {
      auto d = strahler_decomposition(*t);
      auto g = canonical_grid_check(canonical_tree_drawing(t, d), d);
      CHECK(g.ok);
      CHECK(g.width + 1 == strahler_numbers(*t)[t->root()]);
    }
  }
}

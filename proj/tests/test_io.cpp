#include <sstream>

#include "doctest.h"
#include "treemorph/generators.hpp"
#include "treemorph/io.hpp"

using namespace treemorph;

TEST_CASE("tree round trip") {
  auto t = make_random_tree(23, 17);
  std::ostringstream os;
  write_tree(os, *t);
  std::istringstream is(os.str());
  auto back = read_tree(is);
  CHECK(back->vertex_count() == t->vertex_count());
  CHECK(back->root() == t->root());
  for (int v = 0; v < 23; ++v)
    if (v != t->root()) CHECK(back->parent(v) == t->parent(v));
}

TEST_CASE("drawing round trip is bit exact") {
  auto t = make_path_tree(5);
  Drawing3D d;
  d.tree = t;
  d.position = {{1.0 / 3.0, -2.5e-17, 0.0},
                {1e300, -1e-300, 0.0},
                {0.1, 0.2, 0.0},
                {123456789.123456789, -7, 0.0},
                {3.141592653589793, 2.718281828459045, 0.0}};
  std::ostringstream os;
  write_drawing(os, d);
  std::istringstream is(os.str());
  Drawing3D back = read_drawing(is, t);
  for (int v = 0; v < 5; ++v) {
    CHECK(back.position[v].x == d.position[v].x);
    CHECK(back.position[v].y == d.position[v].y);
    CHECK(back.position[v].z == d.position[v].z);
  }
}

TEST_CASE("morph round trip is bit exact") {
  auto t = make_random_tree(9, 4);
  Morph m;
  for (uint64_t s : {1, 2, 3}) m.keyframes.push_back(random_planar_drawing(t, s));
  std::ostringstream os;
  write_morph(os, m);
  std::istringstream is(os.str());
  Morph back = read_morph(is, t);
  REQUIRE(back.keyframes.size() == m.keyframes.size());
  for (size_t k = 0; k < m.keyframes.size(); ++k)
    CHECK(same_positions(back.keyframes[k], m.keyframes[k]));
}

TEST_CASE("parse errors carry line numbers") {
  SUBCASE("bad header") {
    std::istringstream is("ttree 3 0\n1 0\n2 0\n");
    CHECK_THROWS_AS(read_tree(is), ParseError);
  }
  SUBCASE("bad edge line") {
    std::istringstream is("tree 3 0\n1 0\nnonsense\n");
    try {
      read_tree(is);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
    }
  }
  SUBCASE("truncated drawing") {
    std::istringstream is("drawing 3 2\n0 1 2 0\n");
    CHECK_THROWS_AS(read_drawing(is, nullptr), ParseError);
  }
  SUBCASE("vertex count mismatch against the tree") {
    auto t = make_path_tree(3);
    std::istringstream is("drawing 2 2\n0 0 0 0\n1 1 0 0\n");
    CHECK_THROWS_AS(read_drawing(is, t), ParseError);
  }
  SUBCASE("comments and blank lines are skipped") {
    std::istringstream is("# a tree\n\ntree 2 0\n# edge\n1 0\n");
    auto t = read_tree(is);
    CHECK(t->vertex_count() == 2);
  }
}

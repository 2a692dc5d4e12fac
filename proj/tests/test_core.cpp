#include <catch2/catch_amalgamated.hpp>

#include "k4e/block.hpp"
#include "k4e/common.hpp"
#include "k4e/edge_mask.hpp"

using namespace k4e;

TEST_CASE("admissible orders") {
  CHECK(admissible_order(6));
  CHECK_FALSE(admissible_order(5));
  CHECK_FALSE(admissible_order(12));
  CHECK(admissible_order(10));
  CHECK(admissible_order(11));
  CHECK(admissible_order(15));
  CHECK(admissible_order(16));
  CHECK_FALSE(admissible_order(0));
  CHECK_FALSE(admissible_order(1));
  CHECK_FALSE(admissible_order(7));
}

TEST_CASE("block counts") {
  CHECK(block_count(6) == 3);
  CHECK(block_count(10) == 9);
  CHECK(block_count(11) == 11);
}

TEST_CASE("edge index is a bijection onto [0, C(v,2))") {
  for (int v : {6, 10, 11, 16}) {
    std::vector<char> seen(edge_count(v), 0);
    for (int x = 0; x < v; ++x)
      for (int y = x + 1; y < v; ++y) {
        int idx = edge_index(v, x, y);
        REQUIRE(idx >= 0);
        REQUIRE(idx < edge_count(v));
        REQUIRE_FALSE(seen[idx]);
        seen[idx] = 1;
        auto [px, py] = edge_vertices(v, idx);
        REQUIRE(px == x);
        REQUIRE(py == y);
      }
  }
}

TEST_CASE("edge index increases lexicographically") {
  CHECK(edge_index(6, 0, 1) == 0);
  CHECK(edge_index(6, 0, 5) == 4);
  CHECK(edge_index(6, 1, 2) == 5);
  CHECK(edge_index(6, 4, 5) == 14);
}

TEST_CASE("make_block sorts within pairs and rejects repeats") {
  Block blk = make_block(1, 0, 3, 2);
  CHECK(blk.a == 0);
  CHECK(blk.b == 1);
  CHECK(blk.c == 2);
  CHECK(blk.d == 3);
  CHECK_THROWS_AS(make_block(0, 0, 1, 2), Error);
  CHECK_THROWS_AS(make_block(0, 1, 1, 2), Error);
  CHECK_THROWS_AS(make_block(0, 1, 2, 2), Error);
}

TEST_CASE("block equality ignores within-pair order") {
  CHECK(make_block(0, 1, 2, 3) == make_block(1, 0, 3, 2));
  CHECK(make_block(0, 1, 2, 3) != make_block(2, 3, 0, 1));  // roles differ
}

TEST_CASE("block edges are ab, ac, ad, bc, bd") {
  auto edges = block_edges(make_block(0, 1, 2, 3));
  std::set<std::pair<Vertex, Vertex>> got(edges.begin(), edges.end());
  std::set<std::pair<Vertex, Vertex>> want{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  CHECK(got == want);

  auto shifted = block_edges(make_block(2, 3, 4, 5));
  std::set<std::pair<Vertex, Vertex>> got2(shifted.begin(), shifted.end());
  std::set<std::pair<Vertex, Vertex>> want2{{2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}};
  CHECK(got2 == want2);
}

TEST_CASE("every block has five edges and never the missing pair") {
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = 0; c < 6; ++c) {
        if (c == a || c == b) continue;
        for (int d = c + 1; d < 6; ++d) {
          if (d == a || d == b) continue;
          Block blk = make_block(a, b, c, d);
          auto edges = block_edges(blk);
          std::set<std::pair<Vertex, Vertex>> got(edges.begin(), edges.end());
          CHECK(got.size() == 5);
          CHECK_FALSE(got.count({blk.c, blk.d}));
        }
      }
}

TEST_CASE("block triangles share the degree-3 edge") {
  auto tris = block_triangles(make_block(0, 1, 2, 3));
  CHECK(tris[0] == make_triangle(0, 1, 2));
  CHECK(tris[1] == make_triangle(0, 1, 3));

  auto wrapped = block_triangles(make_block(4, 5, 0, 1));
  CHECK(wrapped[0] == make_triangle(0, 4, 5));
  CHECK(wrapped[1] == make_triangle(1, 4, 5));
}

TEST_CASE("edge mask basics") {
  EdgeMask m(11);
  CHECK(m.count() == 0);
  m.set(0, 1);
  m.set(9, 10);
  CHECK(m.count() == 2);
  CHECK(m.test(0, 1));
  CHECK(m.first_set() == 0);
  EdgeMask n(11);
  n.set(9, 10);
  CHECK(m.intersects(n));
  n.reset(edge_index(11, 9, 10));
  CHECK_FALSE(m.intersects(n));
  CHECK(n.first_unset() == 0);
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "k4e/permutation.hpp"

using namespace k4e;

TEST_CASE("identity and inverses") {
  Permutation id = Permutation::identity(7);
  CHECK(compose(id, id) == id);
  Permutation p = make_permutation({2, 0, 1, 4, 3, 6, 5});
  CHECK(compose(p, inverse(p)) == id);
  CHECK(compose(inverse(p), p) == id);
}

TEST_CASE("make_permutation validates bijections") {
  CHECK_THROWS_AS(make_permutation({0, 0, 1}), Error);
  CHECK_THROWS_AS(make_permutation({0, 3, 1}), Error);
}

TEST_CASE("cycle parsing with fixed-point completion") {
  Permutation p = parse_cycles("(1 2)(3 4)", 10);
  CHECK(p.image[0] == 0);
  CHECK(p.image[1] == 2);
  CHECK(p.image[2] == 1);
  CHECK(p.image[3] == 4);
  CHECK(p.image[4] == 3);
  CHECK(p.image[9] == 9);
  CHECK(parse_cycles("(1)", 6) == Permutation::identity(6));
  CHECK(parse_cycles("()", 6) == Permutation::identity(6));
  CHECK(parse_cycles("", 6) == Permutation::identity(6));
}

TEST_CASE("cycle parsing applies cycles as successor maps") {
  Permutation p = parse_cycles("(0 7 10 6 8 5 2 1 3 9 4)", 11);
  CHECK(p.image[0] == 7);
  CHECK(p.image[7] == 10);
  CHECK(p.image[4] == 0);
}

TEST_CASE("cycle parsing rejects bad input") {
  CHECK_THROWS_AS(parse_cycles("(1 12)", 10), Error);
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 10), Error);
  CHECK_THROWS_AS(parse_cycles("(1 2", 10), Error);
  CHECK_THROWS_AS(parse_cycles("x", 10), Error);
}

TEST_CASE("cycle formatting round-trips random permutations") {
  std::mt19937 rng(4242);
  for (int v : {6, 10, 11}) {
    std::vector<int> images(v);
    for (int i = 0; i < v; ++i) images[i] = i;
    for (int trial = 0; trial < 50; ++trial) {
      std::shuffle(images.begin(), images.end(), rng);
      Permutation p = make_permutation(images);
      CHECK(parse_cycles(cycle_string(p), v) == p);
    }
  }
  CHECK(cycle_string(Permutation::identity(6)) == "()");
}

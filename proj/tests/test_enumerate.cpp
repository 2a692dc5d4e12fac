#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "k4e/classify.hpp"
#include "k4e/enumerate.hpp"
#include "support/fixtures.hpp"

using namespace k4e;

namespace {

std::vector<std::uint32_t> packed_blocks(const Design& d) {
  std::vector<std::uint32_t> out;
  for (const Block& blk : d.blocks) out.push_back(packed(blk));
  return out;
}

}  // namespace

TEST_CASE("order 6 enumeration matches the naive oracle exactly") {
  auto oracle = fixtures::naive_order6_solutions();
  // Oracle value computed independently, then frozen.
  CHECK(oracle.size() == 30);

  std::set<std::vector<std::uint32_t>> seen;
  std::uint64_t dup = 0;
  std::uint64_t count = enumerate_labeled(6, [&](const Design& d) {
    if (!seen.insert(packed_blocks(d)).second) ++dup;
  });
  CHECK(count == 30);
  CHECK(dup == 0);
  CHECK(seen == oracle);
}

TEST_CASE("inadmissible orders are rejected") {
  CHECK_THROWS_AS(enumerate_labeled(7, nullptr), Error);
  CHECK_THROWS_AS(enumerate_labeled(5, nullptr), Error);
  CHECK_THROWS_AS(enumerate_classes(12), Error);
}

TEST_CASE("depth-1 subtrees fix the block covering edge {0,1}") {
  auto roots = depth1_blocks(6);
  REQUIRE(!roots.empty());
  // [0,1,2-3] is the least block overall, so it leads the list.
  CHECK(roots[0] == make_block(0, 1, 2, 3));
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Block want = roots[i];
    enumerate_subtree(6, static_cast<int>(i), [&](const Design& d) {
      CHECK(std::find(d.blocks.begin(), d.blocks.end(), want) != d.blocks.end());
    });
  }
}

TEST_CASE("prefix partition reassembles the full order-6 run") {
  std::vector<std::vector<std::uint32_t>> full;
  enumerate_labeled(6, [&](const Design& d) { full.push_back(packed_blocks(d)); });

  std::vector<std::vector<std::uint32_t>> stitched;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < depth1_blocks(6).size(); ++i)
    total += enumerate_subtree(6, static_cast<int>(i),
                               [&](const Design& d) { stitched.push_back(packed_blocks(d)); });
  CHECK(total == full.size());
  CHECK(stitched == full);  // same designs in the same order
}

TEST_CASE("prefix partition counts agree at order 10") {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < depth1_blocks(10).size(); ++i)
    total += enumerate_subtree(10, static_cast<int>(i), nullptr);
  CHECK(total == enumerate_labeled(10, nullptr));
}

TEST_CASE("every visited design validates and is distinct at order 6") {
  std::set<std::vector<std::uint32_t>> seen;
  enumerate_labeled(6, [&](const Design& d) {
    CHECK(d.order == 6);
    CHECK(d.blocks.size() == 3);  // construction went through validate_design
    CHECK(seen.insert(packed_blocks(d)).second);
  });
  CHECK(seen.size() == 30);
}

TEST_CASE("order-6 classification matches the oracle through orbit-stabilizer") {
  Classification c = enumerate_classes(6);
  REQUIRE(c.classes.size() == 1);
  CHECK(c.labeled_total == 30);
  CHECK(c.classes[0].aut_order == 24);
  CHECK(c.classes[0].size == 30);
  CHECK(c.classes[0].size * c.classes[0].aut_order == factorial(6));
  CHECK(c.classes[0].representative == canonical_form(fixtures::order6_design()).design);
}

TEST_CASE("order-10 classification finds three classes") {
  Classification c = enumerate_classes(10, 2);
  REQUIRE(c.classes.size() == 3);
  std::uint64_t sum = 0;
  for (const DesignClass& cls : c.classes) {
    CHECK(cls.size * cls.aut_order == factorial(10));
    sum += cls.size;
  }
  CHECK(sum == c.labeled_total);

  // classification output is independent of the worker count
  Classification sequential = enumerate_classes(10, 1);
  REQUIRE(sequential.classes.size() == 3);
  for (int k = 0; k < 3; ++k) {
    CHECK(sequential.classes[k].representative == c.classes[k].representative);
    CHECK(sequential.classes[k].aut_order == c.classes[k].aut_order);
    CHECK(sequential.classes[k].size == c.classes[k].size);
  }
}

#pragma once

// Shared test fixtures: the reference designs of orders 6, 10 and 11, the
// expected exclusion sets for the intersection spectra, and an independent
// brute-force enumerator for order 6 used as the oracle for the main search.

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "k4e/design.hpp"

namespace fixtures {

inline k4e::Design order6_design() {
  using k4e::make_block;
  return k4e::validate_design(
      6, {make_block(0, 1, 2, 3), make_block(2, 3, 4, 5), make_block(4, 5, 0, 1)});
}

/// The three reference designs of order 10 (indices 0,1,2 = B1,B2,B3).
inline std::vector<k4e::Design> order10_designs() {
  using k4e::make_block;
  std::vector<k4e::Design> out;
  out.push_back(k4e::validate_design(
      10, {make_block(0, 1, 2, 3), make_block(2, 3, 4, 5), make_block(4, 5, 0, 1),
           make_block(6, 7, 0, 1), make_block(8, 9, 0, 1), make_block(6, 8, 2, 3),
           make_block(7, 9, 2, 3), make_block(6, 9, 4, 5), make_block(7, 8, 4, 5)}));
  out.push_back(k4e::validate_design(
      10, {make_block(0, 1, 2, 3), make_block(2, 3, 4, 5), make_block(4, 5, 0, 1),
           make_block(6, 7, 0, 1), make_block(8, 9, 0, 1), make_block(6, 8, 2, 4),
           make_block(7, 9, 2, 4), make_block(6, 9, 3, 5), make_block(7, 8, 3, 5)}));
  out.push_back(k4e::validate_design(
      10, {make_block(0, 1, 2, 3), make_block(2, 3, 4, 5), make_block(4, 5, 0, 1),
           make_block(6, 7, 0, 2), make_block(8, 9, 0, 2), make_block(6, 8, 1, 4),
           make_block(7, 9, 1, 4), make_block(6, 9, 3, 5), make_block(7, 8, 3, 5)}));
  return out;
}

/// The two cyclic designs of order 11: blocks [i, i+1, (i+3)-(i+step)] mod 11
/// with step 5 (B1, index 0) and step 7 (B2, index 1).
inline std::vector<k4e::Design> order11_designs() {
  std::vector<k4e::Design> out;
  for (int step : {5, 7}) {
    std::vector<k4e::Block> blocks;
    for (int i = 0; i < 11; ++i)
      blocks.push_back(
          k4e::make_block(i, (i + 1) % 11, (i + 3) % 11, (i + step) % 11));
    out.push_back(k4e::validate_design(11, std::move(blocks)));
  }
  return out;
}

inline const std::vector<std::pair<int, int>> kExcluded10 = {
    {1, 8}, {3, 1}, {3, 5}, {4, 1}, {4, 3}, {5, 1}, {5, 2}};

inline const std::vector<std::pair<int, int>> kExcluded11 = {
    {3, 0}, {4, 0}, {4, 6}, {5, 0}, {5, 1}, {5, 2}, {6, 0}, {6, 1}, {6, 3}, {6, 4}};

/// Brute-force order-6 enumeration, independent of the production search:
/// plain recursion over every block placement in any order, deduplicated via
/// a set of sorted packed block lists.
inline std::set<std::vector<std::uint32_t>> naive_order6_solutions() {
  std::vector<k4e::Block> all;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = 0; c < 6; ++c) {
        if (c == a || c == b) continue;
        for (int d = c + 1; d < 6; ++d) {
          if (d == a || d == b) continue;
          all.push_back(k4e::make_block(a, b, c, d));
        }
      }

  std::set<std::vector<std::uint32_t>> solutions;
  std::vector<const k4e::Block*> chosen;
  bool used_edge[6][6] = {};
  std::function<void()> recurse = [&]() {
    if (chosen.size() == 3) {
      std::vector<std::uint32_t> key;
      for (const k4e::Block* blk : chosen) key.push_back(k4e::packed(*blk));
      std::sort(key.begin(), key.end());
      solutions.insert(key);
      return;
    }
    for (const k4e::Block& blk : all) {
      auto edges = k4e::block_edges(blk);
      bool clash = false;
      for (auto [x, y] : edges)
        if (used_edge[x][y]) clash = true;
      if (clash) continue;
      for (auto [x, y] : edges) used_edge[x][y] = true;
      chosen.push_back(&blk);
      recurse();
      chosen.pop_back();
      for (auto [x, y] : edges) used_edge[x][y] = false;
    }
  };
  recurse();
  return solutions;
}

inline std::string data_dir() {
  if (const char* dir = std::getenv("K4E_DATA_DIR")) return dir;
  return "data";
}

}  // namespace fixtures

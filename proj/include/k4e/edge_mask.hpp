#pragma once

// Bitset over the C(v,2) edges of K_v, addressed by the triangular edge index.

#include <cstdint>
#include <vector>

#include "k4e/block.hpp"
#include "k4e/common.hpp"

namespace k4e {

struct EdgeMask {
  int order = 0;
  std::vector<std::uint64_t> words;

  explicit EdgeMask(int v) : order(v), words((edge_count(v) + 63) / 64, 0) {}

  bool test(int index) const { return (words[index >> 6] >> (index & 63)) & 1; }
  void set(int index) { words[index >> 6] |= std::uint64_t(1) << (index & 63); }
  void reset(int index) { words[index >> 6] &= ~(std::uint64_t(1) << (index & 63)); }

  bool test(int x, int y) const { return test(edge_index(order, x, y)); }
  void set(int x, int y) { set(edge_index(order, x, y)); }

  bool intersects(const EdgeMask& other) const {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (words[i] & other.words[i]) return true;
    return false;
  }

  int count() const {
    int n = 0;
    for (auto w : words) n += __builtin_popcountll(w);
    return n;
  }

  bool full() const { return count() == edge_count(order); }

  /// Least set edge index, or -1 when empty.
  int first_set() const {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (words[i]) return int(i) * 64 + __builtin_ctzll(words[i]);
    return -1;
  }

  /// Least unset edge index, or -1 when full.
  int first_unset() const {
    int total = edge_count(order);
    for (std::size_t i = 0; i < words.size(); ++i) {
      std::uint64_t inv = ~words[i];
      if (inv) {
        int idx = int(i) * 64 + __builtin_ctzll(inv);
        return idx < total ? idx : -1;
      }
    }
    return -1;
  }
};

inline EdgeMask edge_mask_of(int v, const Block& blk) {
  EdgeMask m(v);
  for (auto [x, y] : block_edges(blk)) m.set(x, y);
  return m;
}

}  // namespace k4e

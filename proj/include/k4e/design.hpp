#pragma once

// Design = order v plus a canonically sorted list of b_v = v(v-1)/10 blocks
// whose edge sets partition E(K_v). Instances are only produced by
// validate_design (or by relabeling a valid design), so holding a Design
// means the partition property has been checked.

#include <algorithm>
#include <compare>
#include <vector>

#include "k4e/block.hpp"
#include "k4e/common.hpp"
#include "k4e/edge_mask.hpp"
#include "k4e/permutation.hpp"

namespace k4e {

struct Design {
  int order = 0;
  std::vector<Block> blocks;  // sorted lexicographically on (a,b,c,d)

  friend auto operator<=>(const Design&, const Design&) = default;
};

/// Checks the edge-partition property and returns the design with blocks
/// canonically sorted. Error precedence: VertexOutOfRange (per block, in
/// input order), then WrongBlockCount, then EdgeCollision / EdgeMissing
/// reported at the least offending edge index.
inline Design validate_design(int v, std::vector<Block> blocks) {
  if (v < 0) throw Error(ErrorKind::BadInput, "negative order");
  for (const Block& blk : blocks) {
    for (Vertex x : {blk.a, blk.b, blk.c, blk.d})
      if (x >= v)
        throw Error(ErrorKind::VertexOutOfRange, "block vertex exceeds order", x);
    if (!(blk.a < blk.b && blk.c < blk.d))
      throw Error(ErrorKind::InvalidBlock, "block pairs are not sorted");
  }
  if (5 * static_cast<long long>(blocks.size()) != edge_count(v))
    throw Error(ErrorKind::WrongBlockCount, "block count is not v(v-1)/10",
                static_cast<int>(blocks.size()));
  std::sort(blocks.begin(), blocks.end());

  if (edge_count(v) <= 64) {
    std::uint64_t covered = 0, collisions = 0;
    for (const Block& blk : blocks) {
      std::uint64_t bits = block_edge_bits64(v, blk);
      collisions |= covered & bits;
      covered |= bits;
    }
    if (collisions) {
      auto [x, y] = edge_vertices(v, __builtin_ctzll(collisions));
      throw Error(ErrorKind::EdgeCollision, "edge covered twice", x, y);
    }
    const std::uint64_t full =
        (edge_count(v) == 64) ? ~std::uint64_t(0) : (std::uint64_t(1) << edge_count(v)) - 1;
    if (covered != full) {
      auto [x, y] = edge_vertices(v, __builtin_ctzll(~covered & full));
      throw Error(ErrorKind::EdgeMissing, "edge not covered", x, y);
    }
  } else {
    EdgeMask covered(v);
    EdgeMask collisions(v);
    for (const Block& blk : blocks) {
      for (auto [x, y] : block_edges(blk)) {
        int idx = edge_index(v, x, y);
        if (covered.test(idx))
          collisions.set(idx);
        else
          covered.set(idx);
      }
    }
    if (int idx = collisions.first_set(); idx >= 0) {
      auto [x, y] = edge_vertices(v, idx);
      throw Error(ErrorKind::EdgeCollision, "edge covered twice", x, y);
    }
    if (int idx = covered.first_unset(); idx >= 0) {
      auto [x, y] = edge_vertices(v, idx);
      throw Error(ErrorKind::EdgeMissing, "edge not covered", x, y);
    }
  }
  Design d;
  d.order = v;
  d.blocks = std::move(blocks);
  return d;
}

inline Block apply_permutation(const Permutation& p, const Block& blk) {
  return make_block(p(blk.a), p(blk.b), p(blk.c), p(blk.d));
}

/// Relabels every block; the result is revalidated.
inline Design apply_permutation(const Permutation& p, const Design& d) {
  if (p.order() != d.order)
    throw Error(ErrorKind::OrderMismatch, "permutation order differs from design order",
                p.order(), d.order);
  std::vector<Block> mapped;
  mapped.reserve(d.blocks.size());
  for (const Block& blk : d.blocks) mapped.push_back(apply_permutation(p, blk));
  return validate_design(d.order, std::move(mapped));
}

/// T(B) over all blocks, sorted. Within one design no triangle repeats, so
/// the list has exactly 2*b_v entries.
inline std::vector<Triangle> design_triangles(const Design& d) {
  std::vector<Triangle> tris;
  tris.reserve(2 * d.blocks.size());
  for (const Block& blk : d.blocks)
    for (const Triangle& t : block_triangles(blk)) tris.push_back(t);
  std::sort(tris.begin(), tris.end());
  return tris;
}

}  // namespace k4e

#pragma once

// Block = one K4-e copy [a,b,c-d]: vertices a,b have degree 3, vertices c,d
// have degree 2, and cd is the missing edge. Both pairs are stored sorted,
// so structural equality coincides with block equality.

#include <array>
#include <compare>
#include <cstdint>

#include "k4e/common.hpp"

namespace k4e {

struct Block {
  Vertex a{}, b{};  // degree-3 pair, a < b
  Vertex c{}, d{};  // degree-2 pair, c < d
  friend auto operator<=>(const Block&, const Block&) = default;
};

struct Triangle {
  Vertex x{}, y{}, z{};  // sorted, x < y < z
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

inline Block make_block(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (a < 0 || a == b || c == d || a == c || a == d || b == c || b == d || c < 0)
    throw Error(ErrorKind::InvalidBlock, "block needs four distinct vertices");
  return Block{static_cast<Vertex>(a), static_cast<Vertex>(b),
               static_cast<Vertex>(c), static_cast<Vertex>(d)};
}

inline Triangle make_triangle(int x, int y, int z) {
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  if (x < 0 || x == y || y == z)
    throw Error(ErrorKind::BadInput, "triangle needs three distinct vertices");
  return Triangle{static_cast<Vertex>(x), static_cast<Vertex>(y), static_cast<Vertex>(z)};
}

/// The five edges ab, ac, ad, bc, bd; the pair cd is not an edge of the block.
inline std::array<std::pair<Vertex, Vertex>, 5> block_edges(const Block& blk) {
  auto e = [](Vertex x, Vertex y) {
    return x < y ? std::pair<Vertex, Vertex>{x, y} : std::pair<Vertex, Vertex>{y, x};
  };
  return {e(blk.a, blk.b), e(blk.a, blk.c), e(blk.a, blk.d), e(blk.b, blk.c), e(blk.b, blk.d)};
}

/// T(B) = the two triangles through the degree-3 edge: {a,b,c} and {a,b,d}.
inline std::array<Triangle, 2> block_triangles(const Block& blk) {
  return {make_triangle(blk.a, blk.b, blk.c), make_triangle(blk.a, blk.b, blk.d)};
}

// Packed encodings, used wherever blocks or triangles are sorted, merged or
// hashed in bulk. Comparing packed values equals comparing the structs.
inline std::uint32_t packed(const Block& blk) {
  return (std::uint32_t(blk.a) << 24) | (std::uint32_t(blk.b) << 16) |
         (std::uint32_t(blk.c) << 8) | std::uint32_t(blk.d);
}

inline Block unpack_block(std::uint32_t p) {
  return Block{Vertex(p >> 24), Vertex((p >> 16) & 0xff), Vertex((p >> 8) & 0xff),
               Vertex(p & 0xff)};
}

inline std::uint32_t packed(const Triangle& t) {
  return (std::uint32_t(t.x) << 16) | (std::uint32_t(t.y) << 8) | std::uint32_t(t.z);
}

// 64-bit edge set of a block; valid for v <= 11 (C(11,2) = 55 bits).
inline std::uint64_t block_edge_bits64(int v, const Block& blk) {
  std::uint64_t bits = 0;
  for (auto [x, y] : block_edges(blk)) bits |= std::uint64_t(1) << edge_index(v, x, y);
  return bits;
}

constexpr int kMaxFastOrder = 11;  // orders whose edge sets fit one machine word

}  // namespace k4e

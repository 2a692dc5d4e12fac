#pragma once

// Exhaustive backtracking generation of all labeled designs of an admissible
// order. Branching rule: at each node pick the uncovered edge with the
// fewest disjoint candidate blocks (ties broken by least edge index) and
// branch over every candidate block containing that edge in any of its five
// edge roles. Distinct choices cover the edge with distinct blocks, so the
// subtrees are disjoint and every design is produced exactly once; a node
// where some uncovered edge has no candidate left is pruned.
//
// At the root all edges tie, so the first branch always covers edge {0,1}.
// The search splits there into independent units (one per block that can
// cover {0,1}); units are the grain for parallel runs and for resume files.

#include <climits>
#include <cstring>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "k4e/block.hpp"
#include "k4e/common.hpp"
#include "k4e/design.hpp"

namespace k4e {

using DesignVisitor = std::function<void(const Design&)>;

namespace detail {

struct EnumTables {
  int v = 0;
  int edges = 0;
  int words = 0;                                  // 64-bit words in a block-set mask
  std::uint64_t full = 0;
  std::vector<Block> blocks;                      // all candidate blocks, canonical order
  std::vector<std::uint64_t> bits;                // 5-edge mask per block
  std::vector<std::vector<std::int32_t>> by_edge; // edge index -> candidate block ids
  std::vector<std::array<std::uint16_t, 5>> edge_ids;  // the 5 edge indices per block
  std::vector<std::uint64_t> conflict;            // per block: mask of blocks sharing an edge
  std::vector<std::uint64_t> d_role;              // per vertex: blocks using it at degree 3
  std::vector<std::uint64_t> n_role;              // per vertex: blocks using it at degree 2
  // feas[c2][c3]: some (d2,d3) >= (c2,c3) solves 2*d2 + 3*d3 = v-1.
  bool feas[8][8] = {};
};

inline const EnumTables& enum_tables(int v) {
  if (!admissible_order(v))
    throw Error(ErrorKind::InadmissibleOrder, "no designs exist for this order", v);
  if (v > kMaxFastOrder)
    throw Error(ErrorKind::OrderTooLarge, "enumeration supports orders up to 11", v);
  static std::map<int, EnumTables> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(v);
  if (it != cache.end()) return it->second;

  EnumTables t;
  t.v = v;
  t.edges = edge_count(v);
  t.full = (t.edges >= 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << t.edges) - 1);
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      for (int c = 0; c < v; ++c) {
        if (c == a || c == b) continue;
        for (int d = c + 1; d < v; ++d) {
          if (d == a || d == b) continue;
          t.blocks.push_back(Block{static_cast<Vertex>(a), static_cast<Vertex>(b),
                                   static_cast<Vertex>(c), static_cast<Vertex>(d)});
        }
      }
  const int nb = static_cast<int>(t.blocks.size());
  t.words = (nb + 63) / 64;
  t.bits.reserve(nb);
  t.by_edge.resize(t.edges);
  t.edge_ids.resize(nb);
  for (int i = 0; i < nb; ++i) {
    t.bits.push_back(block_edge_bits64(v, t.blocks[i]));
    int k = 0;
    for (auto [x, y] : block_edges(t.blocks[i])) {
      int e = edge_index(v, x, y);
      t.by_edge[e].push_back(i);
      t.edge_ids[i][k++] = static_cast<std::uint16_t>(e);
    }
  }
  t.conflict.assign(static_cast<std::size_t>(nb) * t.words, 0);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j)
      if (t.bits[i] & t.bits[j])
        t.conflict[std::size_t(i) * t.words + (j >> 6)] |= std::uint64_t(1) << (j & 63);
  t.d_role.assign(static_cast<std::size_t>(v) * t.words, 0);
  t.n_role.assign(static_cast<std::size_t>(v) * t.words, 0);
  for (int i = 0; i < nb; ++i) {
    const Block& blk = t.blocks[i];
    const std::uint64_t bit = std::uint64_t(1) << (i & 63);
    t.d_role[std::size_t(blk.a) * t.words + (i >> 6)] |= bit;
    t.d_role[std::size_t(blk.b) * t.words + (i >> 6)] |= bit;
    t.n_role[std::size_t(blk.c) * t.words + (i >> 6)] |= bit;
    t.n_role[std::size_t(blk.d) * t.words + (i >> 6)] |= bit;
  }
  // Per-vertex profiles (d2,d3) solve 2*d2 + 3*d3 = v-1, and the counts per
  // profile must add up: v vertices total, sum of d3 equal to 2*b_v (each
  // block has two degree-3 slots). Profiles that no distribution can use are
  // dropped; feas marks the committed states below some usable profile.
  {
    std::vector<std::pair<int, int>> profiles;
    for (int d3 = 0; 3 * d3 <= v - 1; ++d3)
      if ((v - 1 - 3 * d3) % 2 == 0) profiles.emplace_back((v - 1 - 3 * d3) / 2, d3);
    const int np = static_cast<int>(profiles.size());
    const int want = 2 * block_count(v);
    std::vector<bool> supportable(np, false);
    // counts over profiles: tiny search (np <= 3, v <= 11)
    std::vector<int> alpha(np, 0);
    std::function<void(int, int, int)> distribute = [&](int idx, int left, int d3sum) {
      if (idx == np) {
        if (left == 0 && d3sum == want)
          for (int p = 0; p < np; ++p)
            if (alpha[p] > 0) supportable[p] = true;
        return;
      }
      for (int a = 0; a <= left; ++a) {
        alpha[idx] = a;
        distribute(idx + 1, left - a, d3sum + a * profiles[idx].second);
      }
      alpha[idx] = 0;
    };
    distribute(0, v, 0);
    for (int c2 = 0; c2 < 8; ++c2)
      for (int c3 = 0; c3 < 8; ++c3)
        for (int p = 0; p < np; ++p)
          if (supportable[p] && c2 <= profiles[p].first && c3 <= profiles[p].second) {
            t.feas[c2][c3] = true;
            break;
          }
  }
  return cache.emplace(v, std::move(t)).first->second;
}

// Availability is maintained incrementally: `avail` is a bitset over all
// candidate blocks, cnt[e] counts available blocks per edge, and choosing a
// block retires every conflicting block (each block dies once per path, so
// the bookkeeping amortizes). A node is pruned as soon as some uncovered
// edge has no candidate left.
struct Searcher {
  static constexpr int kMaxWords = 32;  // 1980 blocks at v=11

  const EnumTables& t;
  const DesignVisitor& visit;
  std::vector<int> chosen;
  std::vector<Block> buffer;
  std::uint64_t count = 0;

  std::uint64_t avail[kMaxWords];
  std::int16_t cnt[64];
  std::uint8_t c2[16], c3[16];  // committed degree-2 / degree-3 counts per vertex
  std::uint64_t dead_stack[12][kMaxWords];
  std::int16_t cnt_stack[12][64];
  std::uint8_t deg_stack[12][32];

  Searcher(const EnumTables& tables, const DesignVisitor& visitor)
      : t(tables), visit(visitor) {
    chosen.reserve(block_count(t.v));
    buffer.reserve(block_count(t.v));
    for (int w = 0; w < t.words; ++w) avail[w] = ~std::uint64_t(0);
    const int nb = static_cast<int>(t.blocks.size());
    if (nb & 63) avail[t.words - 1] = (std::uint64_t(1) << (nb & 63)) - 1;
    for (int e = 0; e < t.edges; ++e) cnt[e] = static_cast<std::int16_t>(t.by_edge[e].size());
    std::memset(c2, 0, sizeof(c2));
    std::memset(c3, 0, sizeof(c3));
  }

  bool available(int bi) const { return (avail[bi >> 6] >> (bi & 63)) & 1; }

  void kill(const std::uint64_t* mask, std::uint64_t* dead) {
    for (int w = 0; w < t.words; ++w) {
      std::uint64_t newly = avail[w] & mask[w];
      if (!newly) continue;
      dead[w] |= newly;
      avail[w] &= ~newly;
      do {
        const int dj = w * 64 + __builtin_ctzll(newly);
        newly &= newly - 1;
        for (std::uint16_t e : t.edge_ids[dj]) --cnt[e];
      } while (newly);
    }
  }

  void choose(int bi, int depth) {
    std::uint64_t* dead = dead_stack[depth];
    std::memcpy(cnt_stack[depth], cnt, sizeof(cnt));
    std::memcpy(deg_stack[depth], c2, 16);
    std::memcpy(deg_stack[depth] + 16, c3, 16);
    std::memset(dead, 0, std::size_t(t.words) * 8);
    kill(t.conflict.data() + std::size_t(bi) * t.words, dead);

    const Block& blk = t.blocks[bi];
    ++c3[blk.a];
    ++c3[blk.b];
    ++c2[blk.c];
    ++c2[blk.d];
    // Vertex slot feasibility: once a vertex cannot take another degree-3
    // (degree-2) appearance in any completion, every block using it in that
    // role is unusable.
    for (Vertex x : {blk.a, blk.b, blk.c, blk.d}) {
      if (!t.feas[c2[x]][c3[x] + 1])
        kill(t.d_role.data() + std::size_t(x) * t.words, dead);
      if (!t.feas[c2[x] + 1][c3[x]])
        kill(t.n_role.data() + std::size_t(x) * t.words, dead);
    }
  }

  void unchoose(int depth) {
    const std::uint64_t* dead = dead_stack[depth];
    for (int w = 0; w < t.words; ++w) avail[w] |= dead[w];
    std::memcpy(cnt, cnt_stack[depth], sizeof(cnt));
    std::memcpy(c2, deg_stack[depth], 16);
    std::memcpy(c3, deg_stack[depth] + 16, 16);
  }

  void dfs(std::uint64_t covered, int depth) {
    if (covered == t.full) {
      emit();
      ++count;
      return;
    }
    // Most-constrained uncovered edge; prune when one is dead.
    int best_e = -1, best_cnt = INT_MAX;
    for (std::uint64_t m = ~covered & t.full; m; m &= m - 1) {
      const int e = __builtin_ctzll(m);
      if (cnt[e] < best_cnt) {
        if (cnt[e] == 0) return;
        best_cnt = cnt[e];
        best_e = e;
      }
    }
    for (std::int32_t bi : t.by_edge[best_e]) {
      if (!available(bi)) continue;
      chosen.push_back(bi);
      choose(bi, depth);
      dfs(covered | t.bits[bi], depth + 1);
      unchoose(depth);
      chosen.pop_back();
    }
  }

  void emit() {
    if (!visit) return;
    buffer.clear();
    for (int bi : chosen) buffer.push_back(t.blocks[bi]);
    visit(validate_design(t.v, buffer));
  }
};

}  // namespace detail

/// The depth-1 branch blocks: every candidate block covering edge {0,1}, in
/// canonical order. Index positions identify subtrees for partitioned runs.
inline std::vector<Block> depth1_blocks(int v) {
  const auto& t = detail::enum_tables(v);
  std::vector<Block> out;
  out.reserve(t.by_edge[0].size());
  for (std::int32_t bi : t.by_edge[0]) out.push_back(t.blocks[bi]);
  return out;
}

/// Enumerates the designs whose {0,1}-covering block is depth1_blocks(v)[index].
inline std::uint64_t enumerate_subtree(int v, int index, const DesignVisitor& visit) {
  const auto& t = detail::enum_tables(v);
  if (index < 0 || index >= static_cast<int>(t.by_edge[0].size()))
    throw Error(ErrorKind::BadInput, "subtree index out of range", index);
  detail::Searcher searcher(t, visit);
  const std::int32_t bi = t.by_edge[0][index];
  searcher.chosen.push_back(bi);
  searcher.choose(bi, 0);
  searcher.dfs(t.bits[bi], 1);
  return searcher.count;
}

/// Visits every labeled design of order v exactly once (sequentially, in
/// deterministic subtree order) and returns the count.
inline std::uint64_t enumerate_labeled(int v, const DesignVisitor& visit) {
  const auto& t = detail::enum_tables(v);
  detail::Searcher searcher(t, visit);
  searcher.dfs(0, 0);
  return searcher.count;
}

}  // namespace k4e

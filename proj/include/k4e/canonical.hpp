#pragma once

// Canonical forms, isomorphism testing with witnesses, and automorphism
// groups. Everything works by direct search over vertex bijections, which at
// v <= 11 is fast once the search is pruned by degree profiles, the D/N pair
// sets, and block membership. The matcher fixes its pattern design up front
// (assignment order, incidence lists), so testing many candidate designs
// against one representative costs almost no setup per candidate.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "k4e/common.hpp"
#include "k4e/design.hpp"
#include "k4e/structure.hpp"

namespace k4e {

struct CanonicalForm {
  Design design;                  // lexicographically least relabeling
  std::uint64_t aut_order = 0;    // number of relabelings fixing the block set
};

namespace detail {

constexpr int kMaxV = kMaxFastOrder + 1;  // array bound for vertex-indexed scratch
constexpr int kMaxBlocks = 12;

// Compact single-design view used on the target side of a match.
struct TargetView {
  std::uint64_t d_pairs = 0;  // degree-3 pairs as edge-index bits
  std::uint64_t n_pairs = 0;  // degree-2 pairs as edge-index bits
  std::uint32_t blocks[kMaxBlocks];
  int nb = 0;
  std::uint8_t profile[kMaxV];  // (d2 << 4) | d3 per vertex

  void build(const Design& d) {
    const int v = d.order;
    d_pairs = n_pairs = 0;
    nb = static_cast<int>(d.blocks.size());
    std::uint8_t c2[kMaxV] = {0}, c3[kMaxV] = {0};
    for (int i = 0; i < nb; ++i) {
      const Block& blk = d.blocks[i];
      blocks[i] = packed(blk);
      d_pairs |= std::uint64_t(1) << edge_index(v, blk.a, blk.b);
      n_pairs |= std::uint64_t(1) << edge_index(v, blk.c, blk.d);
      ++c3[blk.a];
      ++c3[blk.b];
      ++c2[blk.c];
      ++c2[blk.d];
    }
    for (int x = 0; x < v; ++x) profile[x] = std::uint8_t((c2[x] << 4) | c3[x]);
  }

  bool has_block(std::uint32_t key) const {
    int lo = 0, hi = nb;
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (blocks[mid] < key)
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo < nb && blocks[lo] == key;
  }
};

class IsoMatcher {
 public:
  explicit IsoMatcher(const Design& pattern) : pattern_(pattern) {
    const int v = pattern.order;
    if (v > kMaxFastOrder)
      throw Error(ErrorKind::OrderTooLarge, "isomorphism search supports orders up to 11", v);
    nb_ = static_cast<int>(pattern.blocks.size());
    std::uint8_t c2[kMaxV] = {0}, c3[kMaxV] = {0};
    for (int i = 0; i < nb_; ++i) {
      const Block& blk = pattern.blocks[i];
      quads_[i] = {blk.a, blk.b, blk.c, blk.d};
      ++c3[blk.a];
      ++c3[blk.b];
      ++c2[blk.c];
      ++c2[blk.d];
    }
    for (int x = 0; x < v; ++x) profile_[x] = std::uint8_t((c2[x] << 4) | c3[x]);
    profile_multiset_.assign(profile_, profile_ + v);
    std::sort(profile_multiset_.begin(), profile_multiset_.end());

    std::vector<std::vector<int>> blocks_at(v);
    for (int i = 0; i < nb_; ++i)
      for (Vertex x : quads_[i]) blocks_at[x].push_back(i);
    order_ = assignment_order(pattern, blocks_at);
    for (int x = 0; x < v; ++x) {
      at_count_[x] = static_cast<int>(blocks_at[x].size());
      for (int k = 0; k < at_count_[x]; ++k) at_[x][k] = blocks_at[x][k];
    }
  }

  const Design& pattern() const { return pattern_; }

  /// First bijection mapping the pattern onto `target`, if any.
  std::optional<Permutation> find(const Design& target) const {
    std::optional<Permutation> witness;
    search(target, [&](const std::uint8_t* img) {
      witness = Permutation{std::vector<Vertex>(img, img + pattern_.order)};
      return false;
    });
    return witness;
  }

  bool matches(const Design& target) const {
    bool hit = false;
    search(target, [&](const std::uint8_t*) {
      hit = true;
      return false;
    });
    return hit;
  }

  std::vector<Permutation> find_all(const Design& target) const {
    std::vector<Permutation> all;
    search(target, [&](const std::uint8_t* img) {
      all.push_back(Permutation{std::vector<Vertex>(img, img + pattern_.order)});
      return true;
    });
    return all;
  }

 private:
  // Sink gets the image array; returns false to stop the search.
  template <class Sink>
  void search(const Design& target, Sink&& sink) const {
    const int v = pattern_.order;
    if (target.order != v || static_cast<int>(target.blocks.size()) != nb_) return;
    TargetView tgt;
    tgt.build(target);
    {
      std::uint8_t sorted[kMaxV];
      std::copy(tgt.profile, tgt.profile + v, sorted);
      std::sort(sorted, sorted + v);
      if (!std::equal(sorted, sorted + v, profile_multiset_.begin())) return;
    }
    State st;
    st.v = v;
    std::fill(st.img, st.img + v, 255);
    std::fill(st.used, st.used + v, 0);
    std::fill(st.assigned, st.assigned + nb_, 0);
    dfs(st, tgt, 0, sink);
  }

  struct State {
    int v = 0;
    std::uint8_t img[kMaxV];
    std::uint8_t used[kMaxV];
    std::uint8_t assigned[kMaxBlocks];
    bool running = true;
  };

  // Constraint checks completed by assigning img[x]; `assigned` not yet bumped.
  bool consistent(const State& st, const TargetView& tgt, int x) const {
    const int v = st.v;
    for (int k = 0; k < at_count_[x]; ++k) {
      const int bi = at_[x][k];
      const auto& q = quads_[bi];
      if (x == q[0] || x == q[1]) {
        const int other = (x == q[0]) ? q[1] : q[0];
        if (st.img[other] != 255) {
          int p = st.img[x], r = st.img[other];
          if (p > r) std::swap(p, r);
          if (!((tgt.d_pairs >> edge_index(v, p, r)) & 1)) return false;
        }
      } else {
        const int other = (x == q[2]) ? q[3] : q[2];
        if (st.img[other] != 255) {
          int p = st.img[x], r = st.img[other];
          if (p > r) std::swap(p, r);
          if (!((tgt.n_pairs >> edge_index(v, p, r)) & 1)) return false;
        }
      }
      if (st.assigned[bi] == 3) {
        std::uint8_t ma = st.img[q[0]], mb = st.img[q[1]];
        std::uint8_t mc = st.img[q[2]], md = st.img[q[3]];
        if (ma > mb) std::swap(ma, mb);
        if (mc > md) std::swap(mc, md);
        const std::uint32_t key = (std::uint32_t(ma) << 24) | (std::uint32_t(mb) << 16) |
                                  (std::uint32_t(mc) << 8) | std::uint32_t(md);
        if (!tgt.has_block(key)) return false;
      }
    }
    return true;
  }

  template <class Sink>
  void dfs(State& st, const TargetView& tgt, int pos, Sink&& sink) const {
    if (pos == st.v) {
      st.running = sink(st.img);
      return;
    }
    const int x = order_[pos];
    for (int w = 0; w < st.v && st.running; ++w) {
      if (st.used[w] || tgt.profile[w] != profile_[x]) continue;
      st.img[x] = std::uint8_t(w);
      if (consistent(st, tgt, x)) {
        st.used[w] = 1;
        for (int k = 0; k < at_count_[x]; ++k) ++st.assigned[at_[x][k]];
        dfs(st, tgt, pos + 1, sink);
        for (int k = 0; k < at_count_[x]; ++k) --st.assigned[at_[x][k]];
        st.used[w] = 0;
      }
      st.img[x] = 255;
    }
  }

  // Assign along the D-cycle when there is one; otherwise greedily pick the
  // vertex sharing the most blocks with the already placed ones, so block
  // and pair constraints bite as early as possible.
  static std::vector<int> assignment_order(const Design& pattern,
                                           const std::vector<std::vector<int>>& blocks_at) {
    std::vector<int> walk = d_cycle_walk(pattern);
    if (static_cast<int>(walk.size()) == pattern.order) return walk;

    const int v = pattern.order;
    std::vector<int> order;
    order.reserve(v);
    std::vector<char> placed(v, 0);
    std::vector<int> placed_in_block(pattern.blocks.size(), 0);
    auto place = [&](int x) {
      order.push_back(x);
      placed[x] = 1;
      for (int bi : blocks_at[x]) ++placed_in_block[bi];
    };
    int start = 0;
    for (int x = 1; x < v; ++x)
      if (blocks_at[x].size() > blocks_at[start].size()) start = x;
    place(start);
    while (static_cast<int>(order.size()) < v) {
      int best = -1, best_score = -1;
      for (int x = 0; x < v; ++x) {
        if (placed[x]) continue;
        int score = 0;
        for (int bi : blocks_at[x]) score += placed_in_block[bi];
        if (score > best_score) {
          best = x;
          best_score = score;
        }
      }
      place(best);
    }
    return order;
  }

  Design pattern_;
  int nb_ = 0;
  std::array<std::uint8_t, 4> quads_[kMaxBlocks];
  std::uint8_t profile_[kMaxV];
  std::vector<std::uint8_t> profile_multiset_;
  std::vector<int> order_;
  int at_[kMaxV][6];  // block ids containing each vertex (d2+d3 <= 5 at v <= 11)
  int at_count_[kMaxV];
};

}  // namespace detail

/// All relabelings fixing the block set, identity included.
inline std::vector<Permutation> automorphisms(const Design& d) {
  detail::IsoMatcher matcher(d);
  return matcher.find_all(d);
}

struct IsoResult {
  bool isomorphic = false;
  std::optional<Permutation> witness;
};

/// Isomorphism test; a returned witness satisfies
/// apply_permutation(witness, d1) == d2 and is verified before return.
inline IsoResult are_isomorphic(const Design& d1, const Design& d2) {
  if (d1.order != d2.order)
    throw Error(ErrorKind::OrderMismatch, "designs have different orders", d1.order, d2.order);
  detail::IsoMatcher matcher(d1);
  auto witness = matcher.find(d2);
  if (!witness) return {};
  if (apply_permutation(*witness, d1) != d2)
    throw Error(ErrorKind::InternalCheckFailed, "isomorphism witness failed verification");
  return {true, std::move(witness)};
}

/// Lexicographically least relabeling of d over all v! permutations, with
/// the number of permutations attaining it (= |Aut(d)|). The search anchors
/// labels {0,1,2,3} on one block at a time — the least possible first block
/// [0,1,2-3] forces exactly that — and enumerates the remaining labels.
inline CanonicalForm canonical_form(const Design& d) {
  const int v = d.order;
  const int nb = static_cast<int>(d.blocks.size());
  if (nb == 0) throw Error(ErrorKind::BadInput, "empty design");

  std::vector<std::uint32_t> best;
  std::uint64_t best_hits = 0;
  std::vector<std::uint32_t> cand(nb);
  std::vector<Vertex> img(v, 255);
  std::vector<char> used(v, 0);  // consumed original vertices outside the anchor
  std::vector<int> rest;

  auto evaluate = [&]() {
    for (int i = 0; i < nb; ++i) {
      const Block& blk = d.blocks[i];
      Vertex ma = img[blk.a], mb = img[blk.b], mc = img[blk.c], md = img[blk.d];
      if (ma > mb) std::swap(ma, mb);
      if (mc > md) std::swap(mc, md);
      cand[i] = (std::uint32_t(ma) << 24) | (std::uint32_t(mb) << 16) |
                (std::uint32_t(mc) << 8) | std::uint32_t(md);
    }
    std::sort(cand.begin(), cand.end());
    if (best.empty() || cand < best) {
      best = cand;
      best_hits = 1;
    } else if (cand == best) {
      ++best_hits;
    }
  };

  std::function<void(int)> assign = [&](int label) {
    if (label == v) {
      evaluate();
      return;
    }
    for (std::size_t k = 0; k < rest.size(); ++k) {
      int u = rest[k];
      if (used[u]) continue;
      used[u] = 1;
      img[u] = static_cast<Vertex>(label);
      assign(label + 1);
      img[u] = 255;
      used[u] = 0;
    }
  };

  for (const Block& anchor : d.blocks) {
    for (int o = 0; o < 4; ++o) {
      std::fill(img.begin(), img.end(), 255);
      std::fill(used.begin(), used.end(), 0);
      img[anchor.a] = (o & 1) ? 1 : 0;
      img[anchor.b] = (o & 1) ? 0 : 1;
      img[anchor.c] = (o & 2) ? 3 : 2;
      img[anchor.d] = (o & 2) ? 2 : 3;
      rest.clear();
      for (int u = 0; u < v; ++u)
        if (img[u] == 255) rest.push_back(u);
      assign(4);
    }
  }

  std::vector<Block> blocks;
  blocks.reserve(nb);
  for (std::uint32_t p : best) blocks.push_back(unpack_block(p));
  CanonicalForm cf;
  cf.design = validate_design(v, std::move(blocks));
  cf.aut_order = best_hits;
  return cf;
}

}  // namespace k4e

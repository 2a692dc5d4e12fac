#pragma once

// Fine triangle intersection machinery: fine_pair for a pair of designs, the
// reference J / J_T sets, the admissible envelope Adm, and the exhaustive
// permutation sweep over class representatives.
//
// fine_pair(d1, d2) = (s, t): s common blocks and t common triangles not
// contributed by common blocks. Within one design a triangle lies in at most
// one block, so the total common triangle count is always t + 2s.
//
// The sweep enumerates permutations in lexicographic image order. By
// aut-invariance, fine_pair(pi∘alpha B_i, B_j) = fine_pair(pi B_i, B_j) for
// every automorphism alpha of B_i, so only permutations that are least in
// their right coset pi·Aut(B_i) are expanded; a full-sweep switch disables
// the reduction for audit runs. Witnesses are the lexicographically least
// (perm, i, j) per achieved pair, identical in both modes and independent of
// the worker count.

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "k4e/canonical.hpp"
#include "k4e/common.hpp"
#include "k4e/design.hpp"
#include "k4e/parallel.hpp"
#include "k4e/permutation.hpp"

namespace k4e {

struct FinePair {
  int s = 0;
  int t = 0;
  friend bool operator==(const FinePair&, const FinePair&) = default;
};

/// Common block count and extra common triangle count for two designs of the
/// same order.
inline FinePair fine_pair(const Design& d1, const Design& d2) {
  if (d1.order != d2.order)
    throw Error(ErrorKind::OrderMismatch, "designs have different orders", d1.order, d2.order);
  std::vector<std::uint32_t> b1, b2;
  b1.reserve(d1.blocks.size());
  b2.reserve(d2.blocks.size());
  for (const Block& blk : d1.blocks) b1.push_back(packed(blk));
  for (const Block& blk : d2.blocks) b2.push_back(packed(blk));
  std::vector<std::uint32_t> common;
  std::set_intersection(b1.begin(), b1.end(), b2.begin(), b2.end(),
                        std::back_inserter(common));

  auto leftover_triangles = [&](const Design& d) {
    std::vector<std::uint32_t> tris;
    for (const Block& blk : d.blocks) {
      if (std::binary_search(common.begin(), common.end(), packed(blk))) continue;
      for (const Triangle& t : block_triangles(blk)) tris.push_back(packed(t));
    }
    std::sort(tris.begin(), tris.end());
    return tris;
  };
  auto t1 = leftover_triangles(d1);
  auto t2 = leftover_triangles(d2);
  std::vector<std::uint32_t> shared;
  std::set_intersection(t1.begin(), t1.end(), t2.begin(), t2.end(),
                        std::back_inserter(shared));
  return FinePair{static_cast<int>(common.size()), static_cast<int>(shared.size())};
}

struct JSets {
  std::vector<int> j;    // achievable common-block counts
  std::vector<int> j_t;  // achievable common-triangle counts
};

/// Reference J(v) and J_T(v) for the supported orders 6, 10, 11.
inline JSets reference_j_sets(int v) {
  if (v != 6 && v != 10 && v != 11)
    throw Error(ErrorKind::UnsupportedOrder, "reference sets cover orders 6, 10, 11", v);
  JSets out;
  const int b = block_count(v);
  if (v == 11) {
    out.j = {0, 1, 2, 3, 4, 5, 6, 11};
  } else {
    for (int s = 0; s <= b; ++s)
      if (s != b - 1 && s != b - 2) out.j.push_back(s);
  }
  switch (v) {
    case 6:
      out.j_t = {0, 2, 3, 6};
      break;
    case 10:
      for (int t = 0; t <= 12; ++t) out.j_t.push_back(t);
      out.j_t.push_back(14);
      out.j_t.push_back(15);
      out.j_t.push_back(18);
      break;
    default:  // 11
      for (int t = 0; t <= 16; ++t) out.j_t.push_back(t);
      out.j_t.push_back(22);
      break;
  }
  return out;
}

struct AdmEnvelope {
  int order = 0;
  std::vector<std::pair<int, int>> pairs;  // sorted (s, t)
};

/// Adm(v) = {(s,t) : s+t <= b_v, s in J, t+2s in J_T}, filtered over the
/// rectangle [0,b_v]^2.
inline AdmEnvelope adm(int v, const std::vector<int>& j, const std::vector<int>& j_t) {
  if (j.empty() || j_t.empty())
    throw Error(ErrorKind::BadInput, "empty J or J_T input");
  const int b = block_count(v);
  std::vector<char> j_has(b + 1, 0), jt_has(3 * b + 1, 0);
  for (int s : j)
    if (0 <= s && s <= b) j_has[s] = 1;
  for (int t : j_t)
    if (0 <= t && t <= 3 * b) jt_has[t] = 1;
  AdmEnvelope env;
  env.order = v;
  for (int s = 0; s <= b; ++s)
    for (int t = 0; s + t <= b; ++t)
      if (j_has[s] && jt_has[t + 2 * s]) env.pairs.emplace_back(s, t);
  return env;
}

struct SpectrumWitness {
  int s = 0, t = 0;
  int source_class = 0, target_class = 0;
  Permutation perm;
};

struct SpectrumOptions {
  int jobs = 1;
  bool full_sweep = false;  // disable the coset reduction
};

struct SpectrumResult {
  int order = 0;
  std::vector<SpectrumWitness> achieved;                 // sorted by (s, t)
  std::vector<std::pair<int, int>> excluded_within_adm;  // Adm(v) minus achieved
  std::vector<int> j_projection;                         // sorted {s}
  std::vector<int> jt_projection;                        // sorted {t + 2s}
};

namespace detail {

inline void insertion_sort_u32(std::uint32_t* a, int n) {
  for (int i = 1; i < n; ++i) {
    std::uint32_t key = a[i];
    int j = i - 1;
    while (j >= 0 && a[j] > key) {
      a[j + 1] = a[j];
      --j;
    }
    a[j + 1] = key;
  }
}

inline int count_common_sorted(const std::uint32_t* a, int na, const std::uint32_t* b, int nb) {
  int i = 0, j = 0, n = 0;
  while (i < na && j < nb) {
    if (a[i] < b[j])
      ++i;
    else if (a[i] > b[j])
      ++j;
    else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

// True iff img is lexicographically least in its right coset img·Aut, where
// auts holds the non-identity automorphism image arrays.
inline bool coset_least(const std::vector<Vertex>& img,
                        const std::vector<std::vector<Vertex>>& auts) {
  const int v = static_cast<int>(img.size());
  for (const auto& alpha : auts) {
    for (int k = 0; k < v; ++k) {
      Vertex composed = img[alpha[k]];
      if (composed < img[k]) return false;  // img∘alpha is smaller
      if (composed > img[k]) break;
    }
  }
  return true;
}

}  // namespace detail

/// Exhaustive sweep of all v! permutations against all ordered class pairs.
/// `reps` must be the complete list of isomorphism classes for the order.
inline SpectrumResult compute_spectrum(int v, const std::vector<Design>& reps,
                                       const SpectrumOptions& opt = {}) {
  int expected = (v == 6) ? 1 : (v == 10) ? 3 : (v == 11) ? 2 : -1;
  if (expected < 0)
    throw Error(ErrorKind::UnsupportedOrder, "spectrum sweep covers orders 6, 10, 11", v);
  if (static_cast<int>(reps.size()) != expected)
    throw Error(ErrorKind::IncompleteClassList,
                "representative list does not match the class count for this order",
                static_cast<int>(reps.size()), expected);
  for (const Design& r : reps)
    if (r.order != v)
      throw Error(ErrorKind::OrderMismatch, "representative has wrong order", r.order, v);

  const int b = block_count(v);
  const int nr = static_cast<int>(reps.size());

  // Static per-representative data.
  std::vector<std::vector<std::array<Vertex, 4>>> quads(nr);
  std::vector<std::vector<std::uint32_t>> target_blocks(nr), target_tris(nr);
  std::vector<std::vector<std::vector<Vertex>>> auts(nr);
  for (int i = 0; i < nr; ++i) {
    for (const Block& blk : reps[i].blocks) {
      quads[i].push_back({blk.a, blk.b, blk.c, blk.d});
      target_blocks[i].push_back(packed(blk));
    }
    for (const Triangle& t : design_triangles(reps[i])) target_tris[i].push_back(packed(t));
    if (!opt.full_sweep) {
      for (const Permutation& p : automorphisms(reps[i])) {
        bool ident = true;
        for (int k = 0; k < v && ident; ++k) ident = (p.image[k] == k);
        if (!ident) auts[i].push_back(p.image);
      }
    }
  }

  struct Cell {
    bool set = false;
    std::vector<Vertex> perm;
    int i = 0, j = 0;
  };
  const int cells = (b + 1) * (b + 1);
  const int workers = std::max(1, opt.jobs);
  std::vector<std::vector<Cell>> tables(workers, std::vector<Cell>(cells));

  // One unit per first image value; lexicographic order inside a unit.
  for_each_unit(v, opt.jobs, [&](int unit, int worker) {
    std::vector<Cell>& table = tables[worker];
    std::vector<Vertex> img(v);
    img[0] = static_cast<Vertex>(unit);
    for (int x = 0, w = 0; x < v; ++x) {
      if (x == unit) continue;
      img[++w] = static_cast<Vertex>(x);
    }
    std::uint32_t mapped[16];
    std::uint32_t tris[32];
    do {
      for (int i = 0; i < nr; ++i) {
        if (!opt.full_sweep && !detail::coset_least(img, auts[i])) continue;
        const int nb = static_cast<int>(quads[i].size());
        for (int k = 0; k < nb; ++k) {
          const auto& q = quads[i][k];
          Vertex ma = img[q[0]], mb = img[q[1]], mc = img[q[2]], md = img[q[3]];
          if (ma > mb) std::swap(ma, mb);
          if (mc > md) std::swap(mc, md);
          mapped[k] = (std::uint32_t(ma) << 24) | (std::uint32_t(mb) << 16) |
                      (std::uint32_t(mc) << 8) | std::uint32_t(md);
          Vertex x1 = ma, y1 = mb, z1 = mc;
          if (y1 > z1) std::swap(y1, z1);
          if (x1 > y1) std::swap(x1, y1);
          tris[2 * k] = (std::uint32_t(x1) << 16) | (std::uint32_t(y1) << 8) | z1;
          Vertex x2 = ma, y2 = mb, z2 = md;
          if (y2 > z2) std::swap(y2, z2);
          if (x2 > y2) std::swap(x2, y2);
          tris[2 * k + 1] = (std::uint32_t(x2) << 16) | (std::uint32_t(y2) << 8) | z2;
        }
        detail::insertion_sort_u32(mapped, nb);
        detail::insertion_sort_u32(tris, 2 * nb);
        for (int j = 0; j < nr; ++j) {
          int s = detail::count_common_sorted(mapped, nb, target_blocks[j].data(),
                                              static_cast<int>(target_blocks[j].size()));
          int total = detail::count_common_sorted(tris, 2 * nb, target_tris[j].data(),
                                                  static_cast<int>(target_tris[j].size()));
          int t = total - 2 * s;
          Cell& cell = table[s * (b + 1) + t];
          if (!cell.set || std::tie(img, i, j) < std::tie(cell.perm, cell.i, cell.j)) {
            cell.set = true;
            cell.perm = img;
            cell.i = i;
            cell.j = j;
          }
        }
      }
    } while (std::next_permutation(img.begin() + 1, img.end()));
  });

  // Deterministic merge: least (perm, i, j) wins per cell.
  std::vector<Cell>& merged = tables[0];
  for (int w = 1; w < workers; ++w) {
    for (int c = 0; c < cells; ++c) {
      Cell& other = tables[w][c];
      if (!other.set) continue;
      Cell& cell = merged[c];
      if (!cell.set || std::tie(other.perm, other.i, other.j) <
                           std::tie(cell.perm, cell.i, cell.j))
        cell = std::move(other);
    }
  }

  SpectrumResult out;
  out.order = v;
  for (int s = 0; s <= b; ++s)
    for (int t = 0; t <= b; ++t) {
      Cell& cell = merged[s * (b + 1) + t];
      if (!cell.set) continue;
      SpectrumWitness w;
      w.s = s;
      w.t = t;
      w.source_class = cell.i;
      w.target_class = cell.j;
      w.perm = Permutation{std::move(cell.perm)};
      out.achieved.push_back(std::move(w));
    }

  // Every witness re-verifies through the public path.
  for (const SpectrumWitness& w : out.achieved) {
    FinePair fp = fine_pair(apply_permutation(w.perm, reps[w.source_class]),
                            reps[w.target_class]);
    if (fp.s != w.s || fp.t != w.t)
      throw Error(ErrorKind::InternalCheckFailed, "spectrum witness failed verification");
  }

  JSets ref = reference_j_sets(v);
  AdmEnvelope envelope = adm(v, ref.j, ref.j_t);
  std::vector<std::pair<int, int>> achieved_pairs;
  for (const SpectrumWitness& w : out.achieved) achieved_pairs.emplace_back(w.s, w.t);
  for (auto& p : envelope.pairs)
    if (!std::binary_search(achieved_pairs.begin(), achieved_pairs.end(), p))
      out.excluded_within_adm.push_back(p);
  for (auto& p : achieved_pairs)
    if (!std::binary_search(envelope.pairs.begin(), envelope.pairs.end(), p))
      throw Error(ErrorKind::InternalCheckFailed, "achieved pair outside the envelope");

  for (const SpectrumWitness& w : out.achieved) {
    out.j_projection.push_back(w.s);
    out.jt_projection.push_back(w.t + 2 * w.s);
  }
  auto dedup = [](std::vector<int>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  };
  dedup(out.j_projection);
  dedup(out.jt_projection);
  return out;
}

}  // namespace k4e

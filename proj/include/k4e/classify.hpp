#pragma once

// Isomorphism classification of all labeled designs of an order. Designs are
// first bucketed by a cheap isomorphism-invariant key, then matched against
// the bucket's representatives with the backtracking isomorphism test, so
// the expensive canonicalizer only ever runs once per class. The
// orbit-stabilizer identity |class| * |Aut| = v! is checked before the
// catalog is returned.

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "k4e/canonical.hpp"
#include "k4e/common.hpp"
#include "k4e/design.hpp"
#include "k4e/enumerate.hpp"
#include "k4e/parallel.hpp"
#include "k4e/structure.hpp"

namespace k4e {

struct DesignClass {
  Design representative;        // canonical form
  std::uint64_t aut_order = 0;
  std::uint64_t size = 0;       // labeled designs in the class
};

struct Classification {
  int order = 0;
  std::uint64_t labeled_total = 0;
  std::vector<DesignClass> classes;  // sorted by representative block list
};

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

namespace detail {

// Cheap isomorphism-invariant key: degree-profile multiset, D/N set sizes
// and pair multiplicities, D-graph cycle structure, and (when the D-graph is
// one Hamiltonian cycle) the multiset of cycle distances spanned by the
// degree-2 pairs. Collisions are harmless — buckets are refined by explicit
// isomorphism tests — but in practice the key separates the classes.
// Single pass over the blocks, stack scratch only.
inline std::vector<int> class_key(const Design& d) {
  const int v = d.order;
  const int nb = static_cast<int>(d.blocks.size());
  std::vector<int> key;
  key.reserve(3 * v + nb + 8);

  std::uint8_t c2[16] = {0}, c3[16] = {0};
  std::uint8_t d_edges[16], n_edges[16];  // edge indices, 8-bit safe for v <= 11 (55 edges)
  std::uint64_t d_mask = 0, n_mask = 0;
  for (int i = 0; i < nb; ++i) {
    const Block& blk = d.blocks[i];
    ++c3[blk.a];
    ++c3[blk.b];
    ++c2[blk.c];
    ++c2[blk.d];
    d_edges[i] = static_cast<std::uint8_t>(edge_index(v, blk.a, blk.b));
    n_edges[i] = static_cast<std::uint8_t>(edge_index(v, blk.c, blk.d));
    d_mask |= std::uint64_t(1) << d_edges[i];
    n_mask |= std::uint64_t(1) << n_edges[i];
  }

  int prof[16];
  for (int x = 0; x < v; ++x) prof[x] = c2[x] * 64 + c3[x];
  std::sort(prof, prof + v);
  key.insert(key.end(), prof, prof + v);

  key.push_back(-1);
  key.push_back(__builtin_popcountll(d_mask));
  key.push_back(__builtin_popcountll(n_mask));
  key.push_back(__builtin_popcountll(d_mask & n_mask));

  auto push_multiplicities = [&](std::uint8_t* edges) {
    std::sort(edges, edges + nb);
    int mult[16], nm = 0;
    for (int i = 0; i < nb;) {
      int j = i;
      while (j < nb && edges[j] == edges[i]) ++j;
      mult[nm++] = j - i;
      i = j;
    }
    std::sort(mult, mult + nm);
    key.insert(key.end(), mult, mult + nm);
  };
  key.push_back(-2);
  push_multiplicities(d_edges);
  key.push_back(-3);
  push_multiplicities(n_edges);

  // D-graph structure: degree histogram, cycle lengths if 2-regular, and the
  // cycle distances of the degree-2 pairs if Hamiltonian.
  std::uint8_t deg[16] = {0};
  std::uint8_t adj[16][2];
  bool simple = __builtin_popcountll(d_mask) == nb;
  bool two_regular = simple;
  if (simple) {
    for (int i = 0; i < nb && two_regular; ++i) {
      const Block& blk = d.blocks[i];
      if (deg[blk.a] >= 2 || deg[blk.b] >= 2) {
        two_regular = false;
        break;
      }
      adj[blk.a][deg[blk.a]++] = blk.b;
      adj[blk.b][deg[blk.b]++] = blk.a;
    }
    for (int x = 0; x < v && two_regular; ++x)
      if (deg[x] != 2) two_regular = false;
  }
  key.push_back(-4);
  key.push_back(two_regular ? 1 : 0);
  if (two_regular) {
    int pos[16];
    std::uint8_t visited[16] = {0};
    int lengths[16], nl = 0;
    for (int start = 0; start < v; ++start) {
      if (visited[start]) continue;
      int length = 0, prev = adj[start][1], cur = start;
      do {
        visited[cur] = 1;
        pos[cur] = length++;
        int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
        prev = cur;
        cur = next;
      } while (cur != start);
      lengths[nl++] = length;
    }
    std::sort(lengths, lengths + nl);
    key.push_back(-5);
    key.insert(key.end(), lengths, lengths + nl);
    if (nl == 1 && lengths[0] == v) {
      int dists[16];
      for (int i = 0; i < nb; ++i) {
        const Block& blk = d.blocks[i];
        int delta = pos[blk.c] - pos[blk.d];
        if (delta < 0) delta = -delta;
        dists[i] = std::min(delta, v - delta);
      }
      std::sort(dists, dists + nb);
      key.push_back(-6);
      key.insert(key.end(), dists, dists + nb);
    }
  }
  return key;
}

class ClassAccumulator {
 public:
  explicit ClassAccumulator(int v) : v_(v) {}

  void consume(const Design& d) {
    auto key = class_key(d);
    auto& bucket = buckets_[key];
    for (auto& entry : bucket) {
      if (entry.matcher.matches(d)) {
        ++entry.count;
        return;
      }
    }
    bucket.push_back(Entry{d, IsoMatcher(d), 1});
  }

  void merge(ClassAccumulator&& other) {
    for (auto& [key, obucket] : other.buckets_) {
      auto& bucket = buckets_[key];
      for (auto& oe : obucket) {
        bool matched = false;
        for (auto& entry : bucket) {
          if (entry.matcher.matches(oe.rep)) {
            entry.count += oe.count;
            matched = true;
            break;
          }
        }
        if (!matched) bucket.push_back(std::move(oe));
      }
    }
    other.buckets_.clear();
  }

  struct Entry {
    Design rep;
    IsoMatcher matcher;
    std::uint64_t count;
  };

  const std::map<std::vector<int>, std::vector<Entry>>& buckets() const { return buckets_; }

 private:
  int v_;
  std::map<std::vector<int>, std::vector<Entry>> buckets_;
};

}  // namespace detail

/// Partitions all labeled designs of order v into isomorphism classes.
/// Throws OrderTooLarge beyond max_order (default 11, the supported range).
inline Classification enumerate_classes(int v, int jobs = 1, int max_order = kMaxFastOrder) {
  if (!admissible_order(v))
    throw Error(ErrorKind::InadmissibleOrder, "no designs exist for this order", v);
  if (v > max_order)
    throw Error(ErrorKind::OrderTooLarge, "order exceeds the configured maximum", v);

  const int units = static_cast<int>(depth1_blocks(v).size());
  const int workers = std::max(1, jobs);
  std::vector<detail::ClassAccumulator> acc;
  acc.reserve(workers);
  for (int w = 0; w < workers; ++w) acc.emplace_back(v);

  for_each_unit(units, jobs, [&](int unit, int worker) {
    enumerate_subtree(v, unit, [&](const Design& d) { acc[worker].consume(d); });
  });
  for (int w = 1; w < workers; ++w) acc[0].merge(std::move(acc[w]));

  Classification out;
  out.order = v;
  for (const auto& [key, bucket] : acc[0].buckets()) {
    for (const auto& entry : bucket) {
      CanonicalForm cf = canonical_form(entry.rep);
      out.classes.push_back(DesignClass{std::move(cf.design), cf.aut_order, entry.count});
      out.labeled_total += entry.count;
    }
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const DesignClass& a, const DesignClass& b) {
              return a.representative < b.representative;
            });

  const std::uint64_t vfact = factorial(v);
  for (const DesignClass& cls : out.classes) {
    if (cls.size * cls.aut_order != vfact)
      throw Error(ErrorKind::InternalCheckFailed,
                  "orbit-stabilizer identity failed for a class");
  }
  return out;
}

}  // namespace k4e

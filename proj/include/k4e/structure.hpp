#pragma once

// Structural analysis of designs: per-vertex degree profiles, the D/N pair
// sets, the cycle structure of the D-graph, and subdesign detection.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "k4e/common.hpp"
#include "k4e/design.hpp"

namespace k4e {

// d2/d3 count the blocks in which a vertex has degree 2 / degree 3; every
// vertex satisfies 2*d2 + 3*d3 = v-1.
struct DegreeProfile {
  std::vector<std::pair<int, int>> per_vertex;  // (d2, d3)
};

inline DegreeProfile degree_profile(const Design& d) {
  DegreeProfile prof;
  prof.per_vertex.assign(d.order, {0, 0});
  for (const Block& blk : d.blocks) {
    prof.per_vertex[blk.a].second++;
    prof.per_vertex[blk.b].second++;
    prof.per_vertex[blk.c].first++;
    prof.per_vertex[blk.d].first++;
  }
  for (int x = 0; x < d.order; ++x) {
    auto [d2, d3] = prof.per_vertex[x];
    if (2 * d2 + 3 * d3 != d.order - 1)
      throw Error(ErrorKind::InternalCheckFailed, "degree identity violated", x);
  }
  return prof;
}

// D = degree-3 pairs over all blocks, N = degree-2 pairs; both as plain sets
// (duplicates collapsed), each pair sorted, lists sorted.
struct DNSets {
  std::vector<std::pair<Vertex, Vertex>> d_pairs;
  std::vector<std::pair<Vertex, Vertex>> n_pairs;
};

inline DNSets dn_sets(const Design& d) {
  DNSets out;
  out.d_pairs.reserve(d.blocks.size());
  out.n_pairs.reserve(d.blocks.size());
  for (const Block& blk : d.blocks) {
    out.d_pairs.emplace_back(blk.a, blk.b);
    out.n_pairs.emplace_back(blk.c, blk.d);
  }
  auto dedup = [](std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  };
  dedup(out.d_pairs);
  dedup(out.n_pairs);
  return out;
}

inline std::vector<std::pair<Vertex, Vertex>> intersect_pair_sets(
    const std::vector<std::pair<Vertex, Vertex>>& a,
    const std::vector<std::pair<Vertex, Vertex>>& b) {
  std::vector<std::pair<Vertex, Vertex>> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Cycle structure of the graph (X, D). When the D-set is 2-regular the
// components are cycles and cycle_lengths holds their sorted lengths;
// otherwise two_regular is false and only the degree histogram is filled.
// A non-2-regular D-graph on a valid order-11 design would falsify the
// structural claims this library re-verifies, so it is reported, not thrown.
struct DCycleReport {
  bool two_regular = false;
  std::vector<int> cycle_lengths;      // sorted, only when two_regular
  std::vector<int> degree_histogram;   // degree_histogram[k] = #vertices of D-degree k
};

inline DCycleReport check_d_cycle(const Design& d) {
  DCycleReport report;
  std::vector<std::vector<int>> adj(d.order);
  auto dn = dn_sets(d);
  for (auto [x, y] : dn.d_pairs) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  int max_deg = 0;
  for (int x = 0; x < d.order; ++x) max_deg = std::max(max_deg, int(adj[x].size()));
  report.degree_histogram.assign(max_deg + 1, 0);
  for (int x = 0; x < d.order; ++x) report.degree_histogram[adj[x].size()]++;
  report.two_regular = (max_deg == 2 && report.degree_histogram[2] == d.order);
  // Repeated D-pairs collapse in the set and drop a vertex below degree 2,
  // so 2-regularity here really is 2-regularity of the multigraph as well.
  if (!report.two_regular) return report;

  std::vector<char> visited(d.order, 0);
  for (int start = 0; start < d.order; ++start) {
    if (visited[start]) continue;
    int length = 0;
    int prev = -1, cur = start;
    do {
      visited[cur] = 1;
      ++length;
      int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
      prev = cur;
      cur = next;
    } while (cur != start);
    report.cycle_lengths.push_back(length);
  }
  std::sort(report.cycle_lengths.begin(), report.cycle_lengths.end());
  return report;
}

/// Walk order of the single Hamiltonian D-cycle, starting at 0 towards the
/// smaller neighbor; empty when (X,D) is not one v-cycle.
inline std::vector<int> d_cycle_walk(const Design& d) {
  auto report = check_d_cycle(d);
  if (!report.two_regular || report.cycle_lengths != std::vector<int>{d.order}) return {};
  std::vector<std::vector<int>> adj(d.order);
  for (auto [x, y] : dn_sets(d).d_pairs) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::vector<int> walk;
  walk.reserve(d.order);
  int prev = std::max(adj[0][0], adj[0][1]);
  int cur = 0;
  for (int i = 0; i < d.order; ++i) {
    walk.push_back(cur);
    int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
    prev = cur;
    cur = next;
  }
  return walk;
}

struct Subdesign {
  std::vector<Vertex> vertices;  // the w-subset, sorted
  std::vector<Block> blocks;     // the blocks confined to it, sorted
};

/// All w-subsets S of the vertex set whose confined blocks form an order-w
/// design on S. Subsets are enumerated directly; w must be admissible and
/// smaller than the host order (otherwise the list is empty).
inline std::vector<Subdesign> find_subdesigns(const Design& d, int w) {
  if (!admissible_order(w))
    throw Error(ErrorKind::InadmissibleOrder, "subdesign order is not admissible", w);
  std::vector<Subdesign> found;
  if (w >= d.order) return found;

  std::vector<std::uint32_t> block_vertex_masks(d.blocks.size());
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const Block& blk = d.blocks[i];
    block_vertex_masks[i] = (1u << blk.a) | (1u << blk.b) | (1u << blk.c) | (1u << blk.d);
  }
  const int need = block_count(w);

  std::vector<int> subset(w);
  for (int i = 0; i < w; ++i) subset[i] = i;
  for (;;) {
    std::uint32_t mask = 0;
    for (int x : subset) mask |= 1u << x;
    Subdesign sub;
    for (std::size_t i = 0; i < d.blocks.size(); ++i)
      if ((block_vertex_masks[i] & ~mask) == 0) sub.blocks.push_back(d.blocks[i]);
    // Confined blocks are edge-disjoint within K_S, so exactly b_w of them
    // is already a full partition of the C(w,2) edges.
    if (static_cast<int>(sub.blocks.size()) == need) {
      sub.vertices.reserve(w);
      for (int x : subset) sub.vertices.push_back(static_cast<Vertex>(x));
      found.push_back(std::move(sub));
    }
    // next w-combination of {0..order-1}
    int i = w - 1;
    while (i >= 0 && subset[i] == d.order - w + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < w; ++j) subset[j] = subset[j - 1] + 1;
  }
  return found;
}

}  // namespace k4e

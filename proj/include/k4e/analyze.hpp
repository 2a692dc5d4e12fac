#pragma once

// Sweeping verification of the structural claims over every labeled design
// of an order: edge-partition validity at all orders, the (1,1) profile at
// order 6, the order-6 subdesign and the 4/6 degree census at order 10, and
// the (2,2) profile, Hamiltonian D-cycle and D/N disjointness at order 11.
// A violation does not abort the sweep; offending designs are reported.

#include <cstdint>
#include <string>
#include <vector>

#include "k4e/common.hpp"
#include "k4e/design.hpp"
#include "k4e/enumerate.hpp"
#include "k4e/parallel.hpp"
#include "k4e/structure.hpp"

namespace k4e {

struct LemmaCheck {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<Design> examples;  // first few offenders, if any
};

struct AnalyzeResult {
  int order = 0;
  std::uint64_t designs = 0;
  std::vector<LemmaCheck> checks;
  bool all_pass = true;
};

namespace detail {

constexpr std::size_t kMaxViolationExamples = 4;

class StructureAccumulator {
 public:
  explicit StructureAccumulator(int v) : v_(v) {
    checks_.push_back({"edge_partition", 0, 0, {}});
    if (v == 6) checks_.push_back({"degree_profile_1_1", 0, 0, {}});
    if (v == 10) {
      checks_.push_back({"degree_census_4_6", 0, 0, {}});
      checks_.push_back({"subdesign_order_6", 0, 0, {}});
    }
    if (v == 11) {
      checks_.push_back({"degree_profile_2_2", 0, 0, {}});
      checks_.push_back({"d_cycle_length_11", 0, 0, {}});
      checks_.push_back({"d_n_disjoint", 0, 0, {}});
    }
  }

  void consume(const Design& d) {
    ++designs_;
    std::size_t idx = 0;
    record(idx++, d, valid_partition(d));
    if (v_ == 6) record(idx++, d, profile_is(d, 1, 1));
    if (v_ == 10) {
      record(idx++, d, census_4_6(d));
      record(idx++, d, has_order6_subdesign(d));
    }
    if (v_ == 11) {
      record(idx++, d, profile_is(d, 2, 2));
      auto dn = masks(d);
      record(idx++, d, hamiltonian_d_cycle(d));
      record(idx++, d, (dn.first & dn.second) == 0);
    }
  }

  void merge(StructureAccumulator&& other) {
    designs_ += other.designs_;
    for (std::size_t i = 0; i < checks_.size(); ++i) {
      checks_[i].checked += other.checks_[i].checked;
      checks_[i].violations += other.checks_[i].violations;
      for (auto& ex : other.checks_[i].examples) {
        if (checks_[i].examples.size() >= kMaxViolationExamples) break;
        checks_[i].examples.push_back(std::move(ex));
      }
    }
  }

  std::uint64_t designs() const { return designs_; }
  std::vector<LemmaCheck> take_checks() { return std::move(checks_); }

 private:
  void record(std::size_t idx, const Design& d, bool ok) {
    ++checks_[idx].checked;
    if (!ok) {
      ++checks_[idx].violations;
      if (checks_[idx].examples.size() < kMaxViolationExamples)
        checks_[idx].examples.push_back(d);
    }
  }

  bool valid_partition(const Design& d) const {
    if (5 * static_cast<int>(d.blocks.size()) != edge_count(v_)) return false;
    std::uint64_t covered = 0;
    for (const Block& blk : d.blocks) {
      std::uint64_t bits = block_edge_bits64(v_, blk);
      if (covered & bits) return false;
      covered |= bits;
    }
    return covered == ((edge_count(v_) >= 64) ? ~std::uint64_t(0)
                                              : (std::uint64_t(1) << edge_count(v_)) - 1);
  }

  bool profile_is(const Design& d, int d2, int d3) const {
    int c2[16] = {0}, c3[16] = {0};
    for (const Block& blk : d.blocks) {
      ++c3[blk.a];
      ++c3[blk.b];
      ++c2[blk.c];
      ++c2[blk.d];
    }
    for (int x = 0; x < v_; ++x)
      if (c2[x] != d2 || c3[x] != d3) return false;
    return true;
  }

  bool census_4_6(const Design& d) const {
    int c2[16] = {0}, c3[16] = {0};
    for (const Block& blk : d.blocks) {
      ++c3[blk.a];
      ++c3[blk.b];
      ++c2[blk.c];
      ++c2[blk.d];
    }
    int alpha = 0, beta = 0;
    for (int x = 0; x < v_; ++x) {
      if (c2[x] == 0 && c3[x] == 3) ++alpha;
      else if (c2[x] == 3 && c3[x] == 1) ++beta;
      else return false;
    }
    return alpha == 4 && beta == 6;
  }

  // Three edge-disjoint blocks span >= 6 vertices, and exactly 6 means their
  // 15 edges fill K_6 on that span — an order-6 subdesign.
  bool has_order6_subdesign(const Design& d) const {
    const int nb = static_cast<int>(d.blocks.size());
    std::uint32_t vm[16];
    for (int i = 0; i < nb; ++i) {
      const Block& blk = d.blocks[i];
      vm[i] = (1u << blk.a) | (1u << blk.b) | (1u << blk.c) | (1u << blk.d);
    }
    for (int i = 0; i < nb; ++i)
      for (int j = i + 1; j < nb; ++j) {
        std::uint32_t ij = vm[i] | vm[j];
        if (__builtin_popcount(ij) > 6) continue;
        for (int k = j + 1; k < nb; ++k)
          if (__builtin_popcount(ij | vm[k]) == 6) return true;
      }
    return false;
  }

  // (D bits, N bits) as edge-index sets.
  std::pair<std::uint64_t, std::uint64_t> masks(const Design& d) const {
    std::uint64_t dm = 0, nm = 0;
    for (const Block& blk : d.blocks) {
      dm |= std::uint64_t(1) << edge_index(v_, blk.a, blk.b);
      nm |= std::uint64_t(1) << edge_index(v_, blk.c, blk.d);
    }
    return {dm, nm};
  }

  bool hamiltonian_d_cycle(const Design& d) const {
    int deg[16] = {0};
    int adj[16][2];
    std::uint64_t seen = 0;
    for (const Block& blk : d.blocks) {
      std::uint64_t bit = std::uint64_t(1) << edge_index(v_, blk.a, blk.b);
      if (seen & bit) return false;  // repeated degree-3 pair
      seen |= bit;
      if (deg[blk.a] >= 2 || deg[blk.b] >= 2) return false;
      adj[blk.a][deg[blk.a]++] = blk.b;
      adj[blk.b][deg[blk.b]++] = blk.a;
    }
    for (int x = 0; x < v_; ++x)
      if (deg[x] != 2) return false;
    int length = 0, prev = adj[0][1], cur = 0;
    do {
      ++length;
      int next = (adj[cur][0] != prev) ? adj[cur][0] : adj[cur][1];
      prev = cur;
      cur = next;
    } while (cur != 0 && length <= v_);
    return length == v_;
  }

  int v_;
  std::uint64_t designs_ = 0;
  std::vector<LemmaCheck> checks_;
};

}  // namespace detail

/// Runs every per-design structural check over the full labeled enumeration.
inline AnalyzeResult analyze_order(int v, int jobs = 1) {
  const int units = static_cast<int>(depth1_blocks(v).size());
  const int workers = std::max(1, jobs);
  std::vector<detail::StructureAccumulator> acc;
  acc.reserve(workers);
  for (int w = 0; w < workers; ++w) acc.emplace_back(v);

  for_each_unit(units, jobs, [&](int unit, int worker) {
    enumerate_subtree(v, unit, [&](const Design& d) { acc[worker].consume(d); });
  });
  for (int w = 1; w < workers; ++w) acc[0].merge(std::move(acc[w]));

  AnalyzeResult out;
  out.order = v;
  out.designs = acc[0].designs();
  out.checks = acc[0].take_checks();
  for (const LemmaCheck& c : out.checks)
    if (c.violations != 0) out.all_pass = false;
  return out;
}

}  // namespace k4e

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "k4e/canonical.hpp"
#include "k4e/classify.hpp"
#include "k4e/spectrum.hpp"
#include "support/fixtures.hpp"

using namespace k4e;

namespace {

Permutation random_permutation(int v, std::mt19937& rng) {
  std::vector<int> images(v);
  for (int i = 0; i < v; ++i) images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return make_permutation(images);
}

}  // namespace

TEST_CASE("a design against itself shares all blocks and nothing extra") {
  for (const Design& d :
       {fixtures::order6_design(), fixtures::order10_designs()[0], fixtures::order11_designs()[0]}) {
    FinePair fp = fine_pair(d, d);
    CHECK(fp.s == block_count(d.order));
    CHECK(fp.t == 0);
  }
}

TEST_CASE("order-6 hand pairs") {
  Design d = fixtures::order6_design();
  FinePair swap12 = fine_pair(apply_permutation(parse_cycles("(1 2)", 6), d), d);
  CHECK(swap12 == FinePair{0, 2});
  FinePair two_swaps = fine_pair(apply_permutation(parse_cycles("(1 3)(2 4)", 6), d), d);
  CHECK(two_swaps == FinePair{0, 3});
  FinePair disjointing = fine_pair(apply_permutation(parse_cycles("(2 4)(3 5)", 6), d), d);
  CHECK(disjointing == FinePair{0, 0});
}

TEST_CASE("fine_pair is symmetric and order-checked") {
  std::mt19937 rng(5150);
  auto tens = fixtures::order10_designs();
  for (int trial = 0; trial < 25; ++trial) {
    Design d1 = apply_permutation(random_permutation(10, rng), tens[trial % 3]);
    Design d2 = apply_permutation(random_permutation(10, rng), tens[(trial + 1) % 3]);
    FinePair a = fine_pair(d1, d2);
    FinePair b = fine_pair(d2, d1);
    CHECK(a == b);
    CHECK(a.s + a.t <= block_count(10));
  }
  CHECK_THROWS_AS(fine_pair(fixtures::order6_design(), tens[0]), Error);
}

TEST_CASE("fine_pair is invariant under source automorphisms") {
  std::mt19937 rng(86);
  auto elevens = fixtures::order11_designs();
  auto auts = automorphisms(elevens[0]);
  REQUIRE(auts.size() == 11);
  for (int trial = 0; trial < 10; ++trial) {
    Permutation pi = random_permutation(11, rng);
    FinePair base = fine_pair(apply_permutation(pi, elevens[0]), elevens[1]);
    for (const Permutation& alpha : auts) {
      FinePair same = fine_pair(apply_permutation(compose(pi, alpha), elevens[0]), elevens[1]);
      CHECK(same == base);
    }
  }
}

TEST_CASE("reference J and J_T sets") {
  JSets six = reference_j_sets(6);
  CHECK(six.j == std::vector<int>{0, 3});
  CHECK(six.j_t == std::vector<int>{0, 2, 3, 6});

  JSets ten = reference_j_sets(10);
  CHECK(ten.j == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 9});
  CHECK(ten.j_t ==
        std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 18});

  JSets eleven = reference_j_sets(11);
  CHECK(eleven.j == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 11});
  CHECK(eleven.j_t ==
        std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 22});

  CHECK_THROWS_AS(reference_j_sets(15), Error);
}

TEST_CASE("admissible envelope for order 6") {
  JSets ref = reference_j_sets(6);
  AdmEnvelope env = adm(6, ref.j, ref.j_t);
  std::vector<std::pair<int, int>> want{{0, 0}, {0, 2}, {0, 3}, {3, 0}};
  CHECK(env.pairs == want);
}

TEST_CASE("degenerate envelope") {
  AdmEnvelope env = adm(6, {0}, {0});
  CHECK(env.pairs == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK_THROWS_AS(adm(6, {}, {0}), Error);
}

TEST_CASE("the order-11 envelope contains (3,0)") {
  JSets ref = reference_j_sets(11);
  AdmEnvelope env = adm(11, ref.j, ref.j_t);
  CHECK(std::binary_search(env.pairs.begin(), env.pairs.end(), std::pair<int, int>{3, 0}));
}

TEST_CASE("order-6 spectrum equals the envelope, coset-reduced or not") {
  Classification c = enumerate_classes(6);
  std::vector<Design> reps;
  for (const auto& cls : c.classes) reps.push_back(cls.representative);

  SpectrumOptions reduced;
  SpectrumResult a = compute_spectrum(6, reps, reduced);
  SpectrumOptions full;
  full.full_sweep = true;
  SpectrumResult b = compute_spectrum(6, reps, full);
  SpectrumOptions jobs2 = reduced;
  jobs2.jobs = 2;
  SpectrumResult cpar = compute_spectrum(6, reps, jobs2);

  std::vector<std::pair<int, int>> achieved;
  for (const SpectrumWitness& w : a.achieved) achieved.emplace_back(w.s, w.t);
  JSets ref = reference_j_sets(6);
  CHECK(achieved == adm(6, ref.j, ref.j_t).pairs);
  CHECK(a.excluded_within_adm.empty());
  CHECK(a.j_projection == ref.j);
  CHECK(a.jt_projection == ref.j_t);

  REQUIRE(a.achieved.size() == b.achieved.size());
  for (std::size_t k = 0; k < a.achieved.size(); ++k) {
    CHECK(a.achieved[k].s == b.achieved[k].s);
    CHECK(a.achieved[k].t == b.achieved[k].t);
    CHECK(a.achieved[k].source_class == b.achieved[k].source_class);
    CHECK(a.achieved[k].target_class == b.achieved[k].target_class);
    CHECK(a.achieved[k].perm == b.achieved[k].perm);
    CHECK(cpar.achieved[k].perm == a.achieved[k].perm);
  }
}

TEST_CASE("spectrum rejects incomplete representative lists") {
  CHECK_THROWS_AS(compute_spectrum(10, {fixtures::order10_designs()[0]}), Error);
  CHECK_THROWS_AS(compute_spectrum(15, {}), Error);
}

#include <gtest/gtest.h>

#include <random>

#include "exactcol/chromatic.hpp"
#include "exactcol/closed_form.hpp"
#include "exactcol/contraction.hpp"
#include "exactcol/error.hpp"
#include "exactcol/generators.hpp"
#include "exactcol/matching.hpp"
#include "exactcol/oracle.hpp"
#include "oracles.hpp"

namespace exactcol {
namespace {

TEST(BruteSolve, Examples) {
  const auto c8 = brute_solve(cycle_graph(8), 2, 1);
  EXPECT_TRUE(c8.yes);
  EXPECT_TRUE(is_exact_coloring(cycle_graph(8), c8.witness, 1));
  EXPECT_FALSE(brute_solve(cycle_graph(6), 2, 1).yes);
  EXPECT_FALSE(brute_solve(petersen_graph(), 4, 1).yes);
  const auto p5 = brute_solve(petersen_graph(), 5, 1);
  EXPECT_TRUE(p5.yes);
  EXPECT_TRUE(is_exact_coloring(petersen_graph(), p5.witness, 1));
}

TEST(BruteSolve, WitnessIsFirstInSearchOrder) {
  const auto r = brute_solve(cycle_graph(4), 2, 1);
  ASSERT_TRUE(r.yes);
  EXPECT_EQ(r.witness.assign, (std::vector<int>{0, 0, 1, 1}));
  EXPECT_EQ(r.witness.k, 2);
}

TEST(BruteSolve, AgreesWithEnumeration) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 8;
    const Graph g = oracle_ref::random_graph(n, 0.5, rng);
    const int k = 1 + static_cast<int>(rng() % 3);
    const int d = static_cast<int>(rng() % 3);
    const auto r = brute_solve(g, k, d);
    EXPECT_EQ(r.yes, oracle_ref::exists_exact(g, k, d)) << "t=" << t;
    if (r.yes) EXPECT_TRUE(is_exact_coloring(g, r.witness, d));
  }
}

TEST(BruteSolve, Monotone) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + t % 8;
    const Graph g = oracle_ref::random_graph(n, 0.5, rng);
    const int d = 1 + t % 2;
    bool seen = false;
    for (int k = 1; k <= n; ++k) {
      const bool yes = brute_solve(g, k, d).yes;
      if (seen) EXPECT_TRUE(yes);
      seen = seen || yes;
    }
  }
}

TEST(BruteSolve, ParallelMatchesSequential) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 60; ++t) {
    const Graph g = oracle_ref::random_graph(6 + t % 7, 0.5, rng);
    const int k = 2 + t % 3;
    const int d = 1 + t % 2;
    const auto seq = brute_solve(g, k, d);
    const auto par = brute_solve(g, k, d, {kDefaultNodeBudget, 4});
    EXPECT_EQ(seq.yes, par.yes);
    if (seq.yes) EXPECT_EQ(seq.witness, par.witness);
  }
}

TEST(BruteSolve, Budget) {
  EXPECT_THROW(brute_solve(petersen_graph(), 4, 1, {50}), BudgetExceeded);
  EXPECT_THROW(brute_solve(petersen_graph(), 4, 1, {50, 3}), BudgetExceeded);
}

TEST(BruteChi, Examples) {
  EXPECT_EQ(brute_chi(complete_graph(6), 1).value(), 3);
  EXPECT_FALSE(brute_chi(complete_graph(5), 1).is_finite());
  EXPECT_EQ(brute_chi(cycle_graph(5), 2).value(), 1);
  EXPECT_EQ(brute_chi(Graph(), 1).value(), 1);
}

TEST(BruteChi, AgreesWithEnumeration) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 7;
    const Graph g = oracle_ref::random_graph(n, 0.55, rng);
    const int d = t % 3;
    const SolveOutcome o = brute_chi(g, d);
    EXPECT_EQ(o.value(), oracle_ref::exhaustive_chi_d(g, d)) << "t=" << t;
    if (o.is_finite()) {
      EXPECT_TRUE(is_exact_coloring(g, o.witness(), d));
      EXPECT_EQ(o.witness().k, o.chi());
    }
  }
}

TEST(BruteChi, KMaxTooSmall) {
  EXPECT_THROW(brute_chi(petersen_graph(), 1, 4), BudgetExceeded);
  EXPECT_FALSE(brute_chi(cycle_graph(7), 1, 2).is_finite());
}

TEST(RegularPartitions, Examples) {
  EXPECT_EQ(enumerate_regular_partitions(cycle_graph(6), 1, 100).size(), 2u);
  EXPECT_EQ(enumerate_regular_partitions(cycle_graph(6), 2, 100).size(), 1u);
  const auto k4 = enumerate_regular_partitions(complete_graph(4), 1, 100);
  ASSERT_EQ(k4.size(), 3u);
  EXPECT_EQ(k4[0].parts, (Partition{{0, 1}, {2, 3}}));
  EXPECT_EQ(enumerate_regular_partitions(complete_graph(4), 1, 2).size(), 2u);
}

TEST(RegularPartitions, PartsAreRegularAndCover) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    const Graph g = oracle_ref::random_graph(3 + t % 8, 0.5, rng);
    const int d = 1 + t % 2;
    for (const auto& rp : enumerate_regular_partitions(g, d, 1000)) {
      EXPECT_EQ(rp.regularity, d);
      std::vector<int> seen(g.order(), 0);
      for (const auto& part : rp.parts) {
        const Graph h = induced_subgraph(g, part);
        for (Vertex v = 0; v < h.order(); ++v) EXPECT_EQ(h.degree(v), d);
        EXPECT_EQ(connected_components(h).count, 1);
        for (Vertex v : part) ++seen[v];
      }
      for (int s : seen) EXPECT_EQ(s, 1);
    }
  }
}

TEST(RegularPartitions, DegreeOneMeansPerfectMatchings) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 80; ++t) {
    const Graph g = oracle_ref::random_graph(2 + 2 * (t % 5), 0.5, rng);
    EXPECT_EQ(enumerate_regular_partitions(g, 1, 100000).size(),
              perfect_matchings(g, 100000).size());
  }
}

TEST(ChiViaQuotients, Examples) {
  const SolveOutcome h = chi_via_quotients(tightness_gadget(), 1);
  EXPECT_EQ(h.value(), 3);
  EXPECT_TRUE(is_exact_coloring(tightness_gadget(), h.witness(), 1));
  EXPECT_EQ(chi_via_quotients(cycle_graph(4), 1).value(), 2);
  for (int s = 0; s < 30; ++s) {
    std::mt19937_64 rng(s);
    const int n = 2 * (1 + s % 6);
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({static_cast<int>(rng() % v), v});
    const Graph t(n, edges);
    const SolveOutcome o = chi_via_quotients(t, 1);
    if (has_perfect_matching(t)) {
      EXPECT_EQ(o.value(), n == 2 ? 1 : 2);
    } else {
      EXPECT_FALSE(o.is_finite());
    }
  }
}

TEST(ChiViaQuotients, MatchesMatchingFormulaAtDegreeOne) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 80; ++t) {
    const Graph g = oracle_ref::random_graph(2 + 2 * (t % 5), 0.5, rng);
    std::optional<int> best;
    for (const Matching& m : perfect_matchings(g, 100000)) {
      const int chi = chromatic_number(contract_partition(g, matching_classes(m))).chi;
      best = best ? std::min(*best, chi) : chi;
    }
    EXPECT_EQ(chi_via_quotients(g, 1).value(), best);
  }
}

TEST(OracleProperties, BoundsOnCorpus) {
  std::mt19937_64 rng(18);
  for (int t = 0; t < 120; ++t) {
    const Graph g = oracle_ref::random_graph(2 + t % 9, 0.45, rng);
    for (int d = 1; d <= 2; ++d) {
      const SolveOutcome o = brute_chi(g, d);
      if (!o.is_finite()) continue;
      EXPECT_GE(o.chi(), clique_lower_bound(g, d));
      if (d == 1 && connected_components(g).count == 1 && has_perfect_matching(g)) {
        EXPECT_LE(o.chi(), std::max(1, 2 * g.max_degree() - 1));
      }
    }
  }
}

}  // namespace
}  // namespace exactcol

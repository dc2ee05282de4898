#include <gtest/gtest.h>

#include <random>

#include "exactcol/closed_form.hpp"
#include "exactcol/error.hpp"
#include "exactcol/generators.hpp"
#include "exactcol/oracle.hpp"
#include "oracles.hpp"

namespace exactcol {
namespace {

void expect_witness(const Graph& g, const SolveOutcome& o, int d) {
  if (!o.is_finite()) return;
  EXPECT_TRUE(is_exact_coloring(g, o.witness(), d));
  EXPECT_EQ(o.witness().k, o.chi());
}

TEST(ChiCycle, Examples) {
  EXPECT_EQ(chi_cycle(8, 1).value(), 2);
  EXPECT_EQ(chi_cycle(6, 1).value(), 3);
  EXPECT_FALSE(chi_cycle(7, 1).is_finite());
  EXPECT_EQ(chi_cycle(9, 2).value(), 1);
  EXPECT_FALSE(chi_cycle(9, 3).is_finite());
  EXPECT_THROW(chi_cycle(2, 1), Error);
}

TEST(ChiCycle, ProofWitness) {
  const SolveOutcome o = chi_cycle(8, 1);
  EXPECT_EQ(o.witness().assign, (std::vector<int>{0, 0, 1, 1, 0, 0, 1, 1}));
}

TEST(ChiCycle, AgreesWithBrute) {
  for (int n = 3; n <= 12; ++n) {
    for (int d = 1; d <= 3; ++d) {
      const SolveOutcome o = chi_cycle(n, d);
      expect_witness(cycle_graph(n), o, d);
      EXPECT_EQ(o.value(), brute_chi(cycle_graph(n), d).value()) << n << "," << d;
    }
  }
}

TEST(ChiWheel, Examples) {
  EXPECT_EQ(chi_wheel(4, 1).value(), 2);
  EXPECT_EQ(chi_wheel(6, 1).value(), 3);
  EXPECT_FALSE(chi_wheel(7, 1).is_finite());
  EXPECT_THROW(chi_wheel(3, 1), Error);
  EXPECT_THROW(chi_wheel(6, 2), Error);
}

TEST(ChiWheel, AgreesWithBrute) {
  for (int n = 4; n <= 12; ++n) {
    const SolveOutcome o = chi_wheel(n, 1);
    expect_witness(wheel_graph(n), o, 1);
    EXPECT_EQ(o.value(), brute_chi(wheel_graph(n), 1).value()) << n;
  }
}

TEST(ChiTree, Examples) {
  EXPECT_EQ(chi_tree(path_graph(4), 1).value(), 2);
  EXPECT_FALSE(chi_tree(path_graph(3), 1).is_finite());
  EXPECT_FALSE(chi_tree(star_graph(5), 1).is_finite());
  EXPECT_FALSE(chi_tree(path_graph(4), 2).is_finite());
  EXPECT_EQ(chi_tree(path_graph(2), 1).value(), 1);
  EXPECT_EQ(chi_tree(path_graph(5), 0).value(), 2);
  EXPECT_EQ(chi_tree(path_graph(1), 0).value(), 1);
  try {
    chi_tree(cycle_graph(4), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotATree);
  }
}

TEST(ChiTree, AgreesWithBruteOnRandomTrees) {
  for (int s = 0; s < 120; ++s) {
    std::mt19937_64 rng(s);
    const int n = 2 + s % 11;
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({static_cast<int>(rng() % v), v});
    const Graph t(n, edges);
    for (int d = 0; d <= 2; ++d) {
      const SolveOutcome o = chi_tree(t, d);
      expect_witness(t, o, d);
      EXPECT_EQ(o.value(), brute_chi(t, d).value()) << s << "," << d;
    }
  }
}

TEST(ChiComplete, Examples) {
  EXPECT_EQ(chi_complete(6, 1).value(), 3);
  EXPECT_EQ(chi_complete(6, 2).value(), 2);
  EXPECT_FALSE(chi_complete(5, 1).is_finite());
  EXPECT_EQ(chi_complete(6, 1).witness().assign, (std::vector<int>{0, 0, 1, 1, 2, 2}));
}

TEST(ChiComplete, AgreesWithBrute) {
  for (int n = 1; n <= 9; ++n) {
    for (int d = 0; d <= 4; ++d) {
      const SolveOutcome o = chi_complete(n, d);
      expect_witness(complete_graph(n), o, d);
      EXPECT_EQ(o.value(), brute_chi(complete_graph(n), d).value()) << n << "," << d;
    }
  }
}

TEST(CliqueLowerBound, Examples) {
  EXPECT_EQ(clique_lower_bound(complete_graph(7), 1), 4);
  EXPECT_EQ(clique_lower_bound(cycle_graph(8), 1), 1);
  EXPECT_EQ(clique_lower_bound(petersen_graph(), 0), 2);
}

TEST(RegularTrivial, Examples) {
  const auto c9 = chi_regular_trivial(cycle_graph(9), 2);
  ASSERT_TRUE(c9);
  EXPECT_EQ(c9->value(), 1);
  EXPECT_EQ(chi_regular_trivial(petersen_graph(), 3)->value(), 1);
  EXPECT_FALSE(chi_regular_trivial(path_graph(3), 1));
}

Graph shuffled(const Graph& g, std::uint64_t seed, std::vector<Vertex>* perm_out) {
  std::vector<Vertex> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  if (perm_out) *perm_out = perm;
  return Graph(g.order(), edges);
}

TEST(MatchFamily, RecognizesRelabeledFamilies) {
  for (int n = 4; n <= 11; ++n) {
    for (std::uint64_t s = 0; s < 3; ++s) {
      const Graph c = shuffled(cycle_graph(n), s, nullptr);
      const auto mc = match_family(c);
      ASSERT_TRUE(mc);
      EXPECT_EQ(mc->spec.family, Family::kCycle);
      const SolveOutcome o = relabel_outcome(chi_cycle(n, 1), *mc);
      expect_witness(c, o, 1);

      const Graph k = shuffled(complete_graph(n), s, nullptr);
      const auto mk = match_family(k);
      ASSERT_TRUE(mk);
      EXPECT_EQ(mk->spec.family, Family::kComplete);

      if (n >= 5) {
        const Graph w = shuffled(wheel_graph(n), s, nullptr);
        const auto mw = match_family(w);
        ASSERT_TRUE(mw);
        EXPECT_EQ(mw->spec.family, Family::kWheel);
        expect_witness(w, relabel_outcome(chi_wheel(n, 1), *mw), 1);
      }
    }
  }
  EXPECT_FALSE(match_family(petersen_graph()));
  EXPECT_FALSE(match_family(path_graph(5)));
  EXPECT_FALSE(match_family(disjoint_union(cycle_graph(3), cycle_graph(3))));
}

}  // namespace
}  // namespace exactcol

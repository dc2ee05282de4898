#include <gtest/gtest.h>

#include <random>
#include <set>

#include "exactcol/generators.hpp"
#include "exactcol/matching.hpp"
#include "oracles.hpp"

namespace exactcol {
namespace {

TEST(PerfectMatchings, Examples) {
  EXPECT_EQ(perfect_matchings(cycle_graph(4), 100).size(), 2u);
  EXPECT_TRUE(perfect_matchings(cycle_graph(5), 100).empty());
  EXPECT_EQ(perfect_matchings(petersen_graph(), 100).size(), 6u);
}

TEST(PerfectMatchings, Order) {
  const auto ms = perfect_matchings(complete_graph(4), 100);
  ASSERT_EQ(ms.size(), 3u);
  EXPECT_EQ(ms[0].edges, (std::vector<Edge>{{0, 1}, {2, 3}}));
  EXPECT_EQ(ms[1].edges, (std::vector<Edge>{{0, 2}, {1, 3}}));
  EXPECT_EQ(ms[2].edges, (std::vector<Edge>{{0, 3}, {1, 2}}));
  const auto first = perfect_matchings(complete_graph(4), 1);
  ASSERT_EQ(first.size(), 1u);
  EXPECT_EQ(first[0], ms[0]);
}

TEST(PerfectMatchings, AgreesWithSubsetFilter) {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int t = 0; t < 300 && checked < 120; ++t) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Graph g = oracle_ref::random_graph(n, 0.4, rng);
    if (g.size() > 22) continue;
    ++checked;
    const auto ms = perfect_matchings(g, 1'000'000);
    EXPECT_EQ(ms.size(), oracle_ref::count_perfect_matchings_by_subsets(g));
    std::set<std::vector<Edge>> distinct;
    for (const Matching& m : ms) {
      EXPECT_TRUE(m.covers_all(n));
      for (const Edge& e : m.edges) EXPECT_TRUE(g.has_edge(e.u, e.v));
      distinct.insert(m.edges);
    }
    EXPECT_EQ(distinct.size(), ms.size());
    EXPECT_EQ(has_perfect_matching(g), !ms.empty());
  }
  EXPECT_GE(checked, 100);
}

TEST(ForestMatching, LeafPairing) {
  EXPECT_EQ(forest_perfect_matching(path_graph(4)).size(), 2u);
  EXPECT_TRUE(forest_perfect_matching(path_graph(3)).empty());
  EXPECT_TRUE(forest_perfect_matching(star_graph(5)).empty());
  for (int s = 0; s < 60; ++s) {
    std::mt19937_64 rng(s);
    const int n = 2 + s % 14;
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({static_cast<int>(rng() % v), v});
    const Graph t(n, edges);
    const auto m = forest_perfect_matching(t);
    EXPECT_EQ(!m.empty(), has_perfect_matching(t));
    if (!m.empty()) {
      EXPECT_EQ(static_cast<int>(m.size()) * 2, n);
      for (const Edge& e : m) EXPECT_TRUE(t.has_edge(e.u, e.v));
    }
  }
}

TEST(MatchingClasses, Pairs) {
  const Matching m{{{0, 1}, {2, 3}}};
  EXPECT_EQ(matching_classes(m), (std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}}));
}

}  // namespace
}  // namespace exactcol

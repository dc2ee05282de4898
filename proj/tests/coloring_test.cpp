#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "exactcol/coloring.hpp"
#include "exactcol/error.hpp"
#include "exactcol/generators.hpp"
#include "oracles.hpp"

namespace exactcol {
namespace {

Coloring mono(int n) { return Coloring{1, std::vector<int>(n, 0)}; }

TEST(Defects, Examples) {
  EXPECT_EQ(defects(cycle_graph(5), mono(5)), DefectVector(5, 2));
  EXPECT_EQ(defects(cycle_graph(4), Coloring{2, {0, 1, 0, 1}}), DefectVector(4, 0));
  EXPECT_EQ(defects(path_graph(3), mono(3)), (DefectVector{1, 2, 1}));
}

TEST(Defects, LengthMismatch) {
  try {
    defects(cycle_graph(5), mono(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kLengthMismatch);
  }
}

TEST(IsExact, Examples) {
  EXPECT_TRUE(is_exact_coloring(cycle_graph(5), mono(5), 2));
  EXPECT_TRUE(is_exact_coloring(cycle_graph(8), Coloring{2, {0, 0, 1, 1, 0, 0, 1, 1}}, 1));
  EXPECT_FALSE(is_exact_coloring(complete_graph(4), Coloring{2, {0, 1, 1, 1}}, 1));
  EXPECT_FALSE(is_exact_coloring(cycle_graph(5), mono(4), 2));
  EXPECT_FALSE(is_exact_coloring(cycle_graph(3), Coloring{1, {0, 0, 1}}, 2));
}

TEST(IsProper, Examples) {
  EXPECT_TRUE(is_proper(cycle_graph(4), Coloring{2, {0, 1, 0, 1}}));
  oracle_ref::for_each_coloring(5, 2, [](const std::vector<int>& c) {
    EXPECT_FALSE(is_proper(cycle_graph(5), Coloring{2, c}));
    return false;
  });
  EXPECT_TRUE(is_proper(Graph(4, {}), mono(4)));
}

TEST(IsExact, ClassAuditAndParity) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 10;
    const Graph g = oracle_ref::random_graph(n, 0.4, rng);
    const int k = 1 + static_cast<int>(rng() % 3);
    Coloring c{k, std::vector<int>(n)};
    for (int& x : c.assign) x = static_cast<int>(rng() % k);
    const int d = static_cast<int>(rng() % 3);
    const DefectVector def = defects(g, c);
    EXPECT_EQ(std::accumulate(def.begin(), def.end(), 0) % 2, 0);
    for (Vertex v = 0; v < n; ++v) EXPECT_LE(def[v], g.degree(v));
    // Per-class regularity audit.
    bool regular = true;
    for (int col = 0; col < k; ++col) {
      std::vector<Vertex> cls;
      for (Vertex v = 0; v < n; ++v) {
        if (c.assign[v] == col) cls.push_back(v);
      }
      const Graph h = induced_subgraph(g, cls);
      for (Vertex v = 0; v < h.order(); ++v) regular = regular && h.degree(v) == d;
    }
    EXPECT_EQ(is_exact_coloring(g, c, d), regular);
  }
}

TEST(Precheck, Examples) {
  EXPECT_FALSE(feasibility_precheck(path_graph(3), 2));
  EXPECT_TRUE(feasibility_precheck(cycle_graph(9), 2));
  EXPECT_TRUE(feasibility_precheck(Graph(1, {}), 0));
  const Graph u = disjoint_union(complete_graph(4), complete_graph(2));
  EXPECT_TRUE(feasibility_precheck(u, 1));
  EXPECT_FALSE(feasibility_precheck(u, 2));
}

TEST(SolveOutcome, Variants) {
  const SolveOutcome inf = SolveOutcome::infeasible();
  EXPECT_FALSE(inf.is_finite());
  EXPECT_FALSE(inf.value());
  EXPECT_EQ(describe(inf), "inf");
  const SolveOutcome two = SolveOutcome::finite(2, Coloring{2, {0, 1}});
  EXPECT_TRUE(two.is_finite());
  EXPECT_EQ(two.value(), 2);
  EXPECT_EQ(two.witness().assign, (std::vector<int>{0, 1}));
  EXPECT_EQ(describe(two), "2");
}

TEST(ColoringText, RoundTrip) {
  const Coloring c{3, {0, 2, 1, 1}};
  const std::string text = write_coloring(c);
  EXPECT_EQ(text, "3\n0\n2\n1\n1\n");
  EXPECT_EQ(read_coloring(text), c);
  EXPECT_EQ(read_coloring("2\r\n0\r\n1\r\n"), (Coloring{2, {0, 1}}));
  EXPECT_THROW(read_coloring("2\n0\n5\n"), ParseError);
  EXPECT_THROW(read_coloring("x\n"), ParseError);
  EXPECT_THROW(read_coloring(""), ParseError);
}

TEST(Compact, Renumbers) {
  EXPECT_EQ(compact(Coloring{5, {4, 4, 1, 3}}), (Coloring{3, {0, 0, 1, 2}}));
}

}  // namespace
}  // namespace exactcol

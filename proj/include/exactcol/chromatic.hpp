#pragma once

#include <cstdint>
#include <vector>

#include "exactcol/coloring.hpp"
#include "exactcol/graph.hpp"

namespace exactcol {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct ChromaticResult {
  int chi = 0;
  Coloring witness;  // proper, witness.k == chi
};

// Exact chromatic number, computed per connected component.
//
// Chordal components take the perfect-elimination path: greedy coloring in
// reverse elimination order uses exactly omega colors. Other components run
// an iterative-deepening search from the clique lower bound up to the DSATUR
// greedy upper bound. Throws BudgetExceeded once `budget` search nodes have
// been spent.
ChromaticResult chromatic_number(const Graph& g,
                                 std::uint64_t budget = kDefaultNodeBudget);

// Whether a proper coloring with at most k colors exists; on success the
// coloring is stored in `witness` when non-null. Throws BudgetExceeded.
bool k_colorable(const Graph& g, int k, Coloring* witness,
                 std::uint64_t budget = kDefaultNodeBudget);

// A maximum clique, sorted. Chordal graphs are answered from a perfect
// elimination ordering, others by branch and bound with a greedy-coloring
// bound. Throws BudgetExceeded.
std::vector<Vertex> maximum_clique(const Graph& g,
                                   std::uint64_t budget = kDefaultNodeBudget);

inline int clique_number(const Graph& g,
                         std::uint64_t budget = kDefaultNodeBudget) {
  return static_cast<int>(maximum_clique(g, budget).size());
}

// DSATUR greedy coloring (no backtracking).
Coloring dsatur_coloring(const Graph& g);

}  // namespace exactcol

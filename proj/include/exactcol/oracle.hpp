#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "exactcol/chromatic.hpp"
#include "exactcol/coloring.hpp"
#include "exactcol/contraction.hpp"
#include "exactcol/graph.hpp"

namespace exactcol {

struct OracleOptions {
  std::uint64_t budget = kDefaultNodeBudget;
  // Values above 1 split the search below a short prefix across threads.
  // Verdicts and witnesses are identical to the sequential search.
  int threads = 1;
};

// Answer to "does g have an exact (k, d)-coloring?". On YES the witness is
// the first coloring found by the search: vertices are colored in index
// order within each component, colors tried in increasing order.
struct DecisionResult {
  bool yes = false;
  Coloring witness;
};

// Complete backtracking search, solved per connected component. A vertex may
// take color c only if c <= 1 + the largest color used before it. Partial
// assignments are cut as soon as a vertex has more than d same-colored
// neighbors, or too few uncolored neighbors left to reach d.
// Throws BudgetExceeded.
DecisionResult brute_solve(const Graph& g, int k, int d,
                           const OracleOptions& options = {});

// Smallest k <= k_max with an exact (k, d)-coloring. When none exists up to
// the largest useful k (floor(n_c / (d + 1)) per component, since every
// nonempty class has at least d + 1 vertices), the outcome is Infeasible.
// Throws BudgetExceeded when the budget runs out, or when a coloring exists
// but needs more than k_max colors. k_max <= 0 means unbounded.
SolveOutcome brute_chi(const Graph& g, int d, int k_max = 0,
                       const OracleOptions& options = {});

// A partition of V whose classes each induce a connected d-regular subgraph.
struct RegularPartition {
  Partition parts;
  int regularity = 0;

  friend bool operator==(const RegularPartition&, const RegularPartition&) = default;
};

// All partitions of V into connected d-regular induced subgraphs, at most
// `limit`. The lowest unassigned vertex always opens the next class, which
// is grown to every d-regular completion in lexicographic order.
// Throws BudgetExceeded.
std::vector<RegularPartition> enumerate_regular_partitions(
    const Graph& g, int d, std::size_t limit,
    std::uint64_t budget = kDefaultNodeBudget);

// min over regular partitions H of chi(G / H), with the quotient coloring
// blown back up to G. Infeasible when no regular partition exists.
SolveOutcome chi_via_quotients(const Graph& g, int d,
                               std::uint64_t budget = kDefaultNodeBudget);

}  // namespace exactcol

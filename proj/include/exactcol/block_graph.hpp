#pragma once

#include <optional>

#include "exactcol/coloring.hpp"
#include "exactcol/contraction.hpp"
#include "exactcol/graph.hpp"
#include "exactcol/oracle.hpp"

namespace exactcol {

// Partition of V into classes of exactly r vertices, each inducing K_r, or
// nullopt when none exists. Works on the block-cut tree bottom-up: a block
// must cover what its descendants left over, and may take its parent cut
// vertex along only when that is forced by the residue mod r. Among all
// factors the lexicographically least is returned.
// Throws Error(kNotABlockGraph), Error(kBadParameter) for r < 1.
std::optional<Partition> clique_factor(const Graph& g, int r);

// Exact (k, d)-coloring of a block graph through its K_{d+1}-factor: the
// quotient by the factor is chordal and colored optimally.
// Throws Error(kNotABlockGraph), Error(kBadParameter) for d < 0 or k < 1.
DecisionResult blockgraph_solve(const Graph& g, int k, int d);

// Infeasible when no K_{d+1}-factor exists.
SolveOutcome blockgraph_chi(const Graph& g, int d);

}  // namespace exactcol

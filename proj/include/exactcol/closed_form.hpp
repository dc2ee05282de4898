#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "exactcol/chromatic.hpp"
#include "exactcol/coloring.hpp"
#include "exactcol/generators.hpp"
#include "exactcol/graph.hpp"

namespace exactcol {

// Closed-form exact defective chromatic numbers for structured families.
// Each solver builds its witness constructively; vertex numbering follows
// the generators in generators.hpp.

// Cycle C_n (n >= 3). d = 1: 2 when 4 | n, 3 when n is even otherwise,
// infinite for odd n. d = 2: 1. d > 2: infinite. Other d: BadParameter.
SolveOutcome chi_cycle(int n, int d);

// Wheel W_n (n >= 4), d = 1 only: 2 for n = 4, 3 for larger even n,
// infinite for odd n.
SolveOutcome chi_wheel(int n, int d);

// Tree. d = 1: finite iff a perfect matching exists, the witness 2-colors
// T / M. d >= 2: infinite once n >= 2. d = 0: proper 2-coloring.
// Throws Error(kNotATree).
SolveOutcome chi_tree(const Graph& g, int d);

// K_n: n / (d + 1) when (d + 1) | n, else infinite.
SolveOutcome chi_complete(int n, int d);

// ceil(omega / (d + 1)).
int clique_lower_bound(const Graph& g, int d,
                       std::uint64_t budget = kDefaultNodeBudget);

// Finite(1) with the monochromatic coloring when g is d-regular; nullopt
// when the shortcut does not apply.
std::optional<SolveOutcome> chi_regular_trivial(const Graph& g, int d);

struct FamilyMatch {
  FamilySpec spec;
  // Vertex of g playing the role of canonical vertex i.
  std::vector<Vertex> canonical_to_input;
};

// Recognizes g as a cycle, complete graph or wheel in any vertex numbering.
// Complete graphs win over wheels (W_4 = K_4). Trees are handled by
// chi_tree directly.
std::optional<FamilyMatch> match_family(const Graph& g);

// Carries a witness for the canonical graph over to g.
SolveOutcome relabel_outcome(const SolveOutcome& canonical,
                             const FamilyMatch& match);

}  // namespace exactcol

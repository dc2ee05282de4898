#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "exactcol/coloring.hpp"
#include "exactcol/graph.hpp"

namespace exactcol {

// Monotone 3-CNF: every clause lists three variable indices in [0, num_vars).
struct NaeFormula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;

  friend bool operator==(const NaeFormula&, const NaeFormula&) = default;
};

// Text format: "c" comment lines, a header "p nae V C", then C clauses of
// three positive 1-based variables, each terminated by 0 ("1 2 3 0").
// With `strict`, clauses repeating a variable are rejected.
// Throws ParseError(kMalformedFormula).
NaeFormula read_nae_formula(std::string_view text, bool strict = false);
std::string write_nae_formula(const NaeFormula& f);

// Every clause has a true and a false variable.
bool nae_satisfied(const NaeFormula& f, const std::vector<bool>& assignment);
// Exhaustive search over all 2^num_vars assignments (num_vars <= 24).
std::optional<std::vector<bool>> nae_solve_brute(const NaeFormula& f);

enum class ReductionKind { kColoringToExact, kPlanarVariant, kIncrementDefect, kNae3Sat };
std::string_view to_string(ReductionKind kind);

// Where a target vertex came from. `gadget` names the piece ("original",
// "attach", "increment", "clause", "variable"), `copy` is the source vertex,
// clause or variable the piece belongs to, and `role` the vertex's index
// inside the piece.
struct Provenance {
  std::string gadget;
  int copy = 0;
  int role = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ReductionMap {
  ReductionKind kind = ReductionKind::kColoringToExact;
  int target_k = 0;  // 0: not fixed by the reduction
  int target_d = 0;
  Graph source;                      // graph reductions
  std::optional<NaeFormula> formula; // kNae3Sat
  int variable_cycle = 4;            // kNae3Sat: 4, or 3 with triangles
  std::vector<Provenance> vertices;  // one record per target vertex

  std::string to_json() const;
};

struct Reduction {
  Graph graph;
  ReductionMap map;
};

// Attaches a K_{d+1} at every vertex v, identified at v. Attached copy of v
// gets vertices n + v*d + t, t in [0, d). k-colorable <=> exact (k, d).
// Throws Error(kBadParameter) unless k >= 3 and d >= 1.
Reduction reduce_coloring_to_exact(const Graph& g, int k, int d);

// Planar d-regular gadget (K2, K3, K4, octahedron, icosahedron for
// d = 1..5) attached at each vertex of a 4-regular graph, identified at the
// gadget's vertex 0. Throws Error(kNotFourRegular), Error(kBadParameter).
Reduction reduce_planar_variant(const Graph& g, int d);
Graph planar_regular_gadget(int d);

// Exact (2, d) on g <=> exact (2, d + 2) on the result. Each v gains d + 3
// vertices h_0..h_{d+2} forming a clique without the edge h_0h_1, and both
// h_0 and h_1 are joined to v. Throws Error(kBadParameter) for d < 1.
Reduction reduce_increment_defect(const Graph& g, int d);

// Clause j owns vertices 6j..6j+5: literal triangle 6j..6j+2 (in clause
// order), the lone vertex 6j+3 and the edge 6j+4 ~ 6j+5, with every
// triangle vertex joined to the other three. Variable i owns a cycle on
// 6C + s*i .. 6C + s*i + s - 1 (s = 4, or 3 with `use_triangles`) whose
// first vertex is joined to each literal vertex of i.
// NAE-satisfiable <=> exact (2, 2)-colorable.
Reduction reduce_nae3sat(const NaeFormula& f, bool use_triangles = false);

using SourceSolution = std::variant<Coloring, std::vector<bool>>;

// Restricts a target solution to the source: a coloring of the source graph
// for the graph reductions, a truth assignment (variable true iff its cycle
// has color 1) for kNae3Sat. Throws Error(kBadParameter) when the target
// coloring is not exact for the target parameters, and
// Error(kLiftContractViolated) when the lifted solution fails the source
// contract.
SourceSolution lift_solution(const ReductionMap& map, const Coloring& target);

}  // namespace exactcol

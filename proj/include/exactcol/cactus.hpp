#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "exactcol/coloring.hpp"
#include "exactcol/graph.hpp"

namespace exactcol {

// Exact (k, 2)-colorings of cactus graphs.
//
// In such a coloring every vertex lies on exactly one monochromatic cycle
// and every other incident edge is bichromatic. The solver labels each cycle
// block M (monochromatic) or P (polychromatic) on an auxiliary graph whose
// vertices are:
//   x     the special vertex, aux id 0
//   v_i   one per cycle block V_i, aux id 1 + i
//   w_i   one per cycle containing a cycle-simplicial vertex (a vertex on
//         exactly one cycle), ids after the v_i
// with edges w_i v_i, w_i x, and v_i v_j whenever V_i and V_j share a vertex.
// The clique U_j lists the cycles through original vertex u_j.
struct CactusAux {
  int num_vertices = 0;
  // Cycle blocks in ascending order of their smallest vertex, each given in
  // cyclic order.
  std::vector<std::vector<Vertex>> cycles;
  std::vector<int> w_of_cycle;  // aux id of w_i, or -1
  Graph aux;
  std::vector<std::vector<int>> cliques;  // U_j as ascending cycle indices
  // Cycle index of the edge g.neighbors(u)[i], or -1 for a cut edge.
  std::vector<std::vector<int>> edge_cycle;

  static constexpr int x() { return 0; }
  static constexpr int v(int cycle) { return 1 + cycle; }
  int cycle_count() const { return static_cast<int>(cycles.size()); }
};

// Throws Error(kNotACactus).
CactusAux cactus_preprocess(const Graph& g);

enum class Label { kUnlabeled, kM, kP };

struct CycleLabeling {
  std::vector<Label> labels;  // per aux vertex

  Label of_cycle(int cycle) const { return labels[CactusAux::v(cycle)]; }
  friend bool operator==(const CycleLabeling&, const CycleLabeling&) = default;
};

enum class RejectReason {
  kUncoveredVertex,
  kTwoSimplicialCyclesTouch,
  kOddPCycle,
  kAllPClique,
  kAdjacentM,
};

std::string_view to_string(RejectReason reason);

// Two colors exactly, or any k >= 3 (odd P-cycles allowed).
enum class ColorRange { kTwo, kMany };

struct LabelResult {
  std::optional<CycleLabeling> labeling;  // set iff accepted
  RejectReason reason = RejectReason::kUncoveredVertex;  // valid iff rejected
  int passes = 0;  // traversals of the repeat loop

  bool accepted() const { return labeling.has_value(); }
};

// The labeling procedure. `scan_order`, when non-empty, is a permutation of
// 0..n-1 giving the order in which the repeat loop visits the cliques U_j;
// the default is ascending j.
LabelResult cactus_label(const CactusAux& aux, ColorRange range,
                         std::span<const int> scan_order = {});

// Builds the coloring from an accepted labeling: per component, a BFS from
// the lowest vertex (colored 0) paints M-cycles in one color, P-cycles
// properly (alternating when k = 2) and cut edges bichromatically. Throws
// Error(kIncompleteLabeling) if some cycle is unlabeled.
Coloring cactus_extract_coloring(const Graph& g, const CactusAux& aux,
                                 const CycleLabeling& labeling, int k);

// chi_2 of a cactus: 1 for disjoint cycles, else 2 or 3 per the labeling
// procedure, else infinite. Throws Error(kNotACactus).
SolveOutcome cactus_chi2(const Graph& g);

// chi_1 of a cactus via perfect matchings M and chi(G / M).
//
// Exact when the quotient search settles the value; otherwise (the
// enumeration cap was hit before a bipartite quotient turned up) the value
// is only known to lie in [lower_bound, 3] and `best` holds the 3-coloring.
struct CactusChi1Result {
  SolveOutcome best = SolveOutcome::infeasible();
  bool exact = true;
  int lower_bound = 0;
};

inline constexpr std::size_t kDefaultMatchingCap = 100'000;

CactusChi1Result cactus_chi1(const Graph& g,
                             std::size_t matching_cap = kDefaultMatchingCap);

}  // namespace exactcol

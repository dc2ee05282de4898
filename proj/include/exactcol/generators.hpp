#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "exactcol/graph.hpp"

namespace exactcol {

// Named graph families. Canonical numbering:
//   kCycle(n)        0-1-...-(n-1)-0
//   kPath(n)         0-1-...-(n-1)
//   kComplete(n)     all pairs
//   kWheel(n)        hub 0, rim cycle 1-2-...-(n-1)-1
//   kStar(n)         center 0, leaves 1..n-1 (n vertices in total)
//   kPetersen        outer 5-cycle 0..4, spokes i~i+5, inner pentagram
//                    (5+i)~(5+(i+2)%5)
//   kCartesianK2Complete(m), kCategoricalK2Complete(m)
//                    vertex (i, j), i in {0,1}, j in [0, m), is i*m + j
//   kTightnessGadget triangle 0-1-2 with pendants 3~0, 4~1, 5~2
enum class Family {
  kCycle,
  kPath,
  kComplete,
  kWheel,
  kStar,
  kPetersen,
  kCartesianK2Complete,
  kCategoricalK2Complete,
  kTightnessGadget,
};

struct FamilySpec {
  Family family = Family::kCycle;
  int n = 0;  // order, or m for the products; ignored by fixed graphs
};

// Throws Error(kBadParameter) when n is below the family minimum.
Graph gen_family(const FamilySpec& spec);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph wheel_graph(int n);
Graph star_graph(int n);
Graph petersen_graph();
Graph cartesian_k2_complete(int m);
Graph categorical_k2_complete(int m);
Graph tightness_gadget();

// Extra fixed graphs used by tests and the planar reduction.
Graph bowtie_graph();        // triangles 0-1-2 and 2-3-4 sharing vertex 2
Graph fan_graph(int path_order);  // path 0..p-1 plus universal vertex p
Graph octahedron_graph();    // K_{2,2,2}; non-adjacent pairs (0,1),(2,3),(4,5)
Graph icosahedron_graph();   // apex 0, rings 1..5 and 6..10, apex 11

std::optional<Family> family_from_name(std::string_view name);
std::string_view family_name(Family family);

// Seeded random cactus on exactly n vertices, grown by attaching cycle
// blocks (length 3..max_cycle) and, with probability edge_probability,
// single-edge blocks at uniformly chosen existing vertices.
Graph random_cactus(int n, std::uint64_t seed, double edge_probability = 0.25,
                    int max_cycle = 6);

// Seeded random cactus built around a hidden exact (colors, 2)-coloring:
// every vertex gets one monochromatic cycle, and further cycles (even when
// colors = 2) and bridges are properly colored. Growth stops once at least n
// vertices exist, so the order may exceed n by up to a few cycles.
Graph planted_cactus(int n, std::uint64_t seed, int colors = 2,
                     double bridge_probability = 0.3, int max_cycle = 6);

// Seeded random connected block graph on exactly n vertices, grown by
// attaching clique blocks of size 2..max_block at existing vertices.
Graph random_block_graph(int n, std::uint64_t seed, int max_block = 5);

// Seeded Erdos-Renyi G(n, p).
Graph random_gnp(int n, double p, std::uint64_t seed);

}  // namespace exactcol

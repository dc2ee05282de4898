#pragma once

#include <vector>

#include "exactcol/coloring.hpp"
#include "exactcol/graph.hpp"

namespace exactcol {

using Partition = std::vector<std::vector<Vertex>>;

// Quotient graph: class i becomes vertex i; two classes are adjacent iff some
// edge crosses between them. Every class must be nonempty and induce a
// connected subgraph, and the classes must cover each vertex exactly once.
// Throws Error(kNotAPartition) or Error(kDisconnectedClass).
Graph contract_partition(const Graph& g, const Partition& parts);

// Class index of every vertex; throws Error(kNotAPartition) as above.
std::vector<int> class_of(const Partition& parts, int n);

// Blows a coloring of the quotient back up: every vertex takes the color of
// its class.
Coloring lift_quotient_coloring(const Partition& parts, const Coloring& quotient,
                                int n);

}  // namespace exactcol

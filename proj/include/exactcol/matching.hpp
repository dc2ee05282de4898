#pragma once

#include <cstddef>
#include <vector>

#include "exactcol/graph.hpp"

namespace exactcol {

struct Matching {
  std::vector<Edge> edges;  // each (u, v) with u < v

  bool covers_all(int n) const { return 2 * edges.size() == static_cast<std::size_t>(n); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

// Perfect matchings of g, at most `limit` of them. The search always matches
// the lowest unmatched vertex next and tries its partners in increasing
// order, so truncated results are deterministic. Empty when n is odd.
std::vector<Matching> perfect_matchings(const Graph& g, std::size_t limit);

// Existence check via maximum cardinality matching; polynomial, unlike the
// enumeration above.
bool has_perfect_matching(const Graph& g);

// A perfect matching of a forest found by repeatedly pairing a leaf with its
// neighbor; empty when none exists (or n is odd).
std::vector<Edge> forest_perfect_matching(const Graph& g);

// Matching as a partition: one class {u, v} per edge.
std::vector<std::vector<Vertex>> matching_classes(const Matching& m);

}  // namespace exactcol

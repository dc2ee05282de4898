#include "exactcol/contraction.hpp"

#include <string>

#include "exactcol/error.hpp"

namespace exactcol {

std::vector<int> class_of(const Partition& parts, int n) {
  std::vector<int> owner(n, -1);
  for (int c = 0; c < static_cast<int>(parts.size()); ++c) {
    if (parts[c].empty()) {
      throw Error(ErrorKind::kNotAPartition,
                  "class " + std::to_string(c) + " is empty");
    }
    for (Vertex v : parts[c]) {
      if (v < 0 || v >= n) {
        throw Error(ErrorKind::kNotAPartition,
                    "vertex " + std::to_string(v) + " out of range");
      }
      if (owner[v] != -1) {
        throw Error(ErrorKind::kNotAPartition,
                    "vertex " + std::to_string(v) + " in two classes");
      }
      owner[v] = c;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (owner[v] == -1) {
      throw Error(ErrorKind::kNotAPartition,
                  "vertex " + std::to_string(v) + " uncovered");
    }
  }
  return owner;
}

Graph contract_partition(const Graph& g, const Partition& parts) {
  const std::vector<int> owner = class_of(parts, g.order());

  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack;
  for (int c = 0; c < static_cast<int>(parts.size()); ++c) {
    const Vertex start = parts[c].front();
    seen[start] = 1;
    stack.push_back(start);
    std::size_t reached = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (owner[w] == c && !seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != parts[c].size()) {
      throw Error(ErrorKind::kDisconnectedClass,
                  "class " + std::to_string(c) + " is not connected");
    }
  }

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (owner[e.u] != owner[e.v]) edges.push_back({owner[e.u], owner[e.v]});
  }
  return Graph(static_cast<int>(parts.size()), edges);
}

Coloring lift_quotient_coloring(const Partition& parts, const Coloring& quotient,
                                int n) {
  Coloring c{quotient.k, std::vector<int>(n, 0)};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (Vertex v : parts[i]) c.assign[v] = quotient.assign[i];
  }
  return c;
}

}  // namespace exactcol

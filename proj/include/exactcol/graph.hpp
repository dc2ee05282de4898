#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace exactcol {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on the dense vertex set {0, ..., n-1}.
//
// Adjacency lists are sorted and duplicate-free, there are no self-loops and
// the relation is symmetric. Instances are immutable once built, so they can
// be shared freely between threads.
class Graph {
 public:
  Graph() = default;

  // Normalizes `edges`: duplicates (in either orientation) collapse to one
  // edge. Throws Error(kOutOfRange) for endpoints outside [0, n) and
  // Error(kSelfLoop) for pairs (v, v).
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  // 0 for the empty graph.
  int min_degree() const noexcept;
  int max_degree() const noexcept;

  // Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
};

Graph build_graph(int n, std::span<const Edge> edges);

// Component id per vertex, numbered by smallest member; ids are dense.
struct Components {
  int count = 0;
  std::vector<int> id;

  std::vector<std::vector<Vertex>> members() const;
};

Components connected_components(const Graph& g);

// Subgraph induced by `vertices` (which must be distinct). Vertex i of the
// result corresponds to vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Vertex-disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

bool is_bipartite(const Graph& g);

}  // namespace exactcol

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "exactcol/graph.hpp"

namespace exactcol {

// A triangle is classified kCycle; it is also a clique, which
// `is_clique_block` accounts for.
enum class BlockKind { kCycle, kEdge, kClique, kOther };

struct Block {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // (u, v) with u < v, sorted
  BlockKind kind = BlockKind::kOther;
  // kCycle only: the cycle walked from its smallest vertex towards its
  // smaller neighbor.
  std::vector<Vertex> cycle_order;
};

bool is_clique_block(const Block& block);
bool is_cycle_block(const Block& block);

// Maximal biconnected components. Blocks are sorted by their sorted vertex
// lists, so a block's index is determined by the graph alone. Isolated
// vertices belong to no block.
class BlockCutTree {
 public:
  explicit BlockCutTree(const Graph& g);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const std::vector<Vertex>& cut_vertices() const noexcept { return cuts_; }
  std::span<const int> blocks_of(Vertex v) const { return blocks_of_[v]; }
  bool is_cut_vertex(Vertex v) const { return blocks_of_[v].size() >= 2; }

  // Block holding the edge g.neighbors(u)[i].
  int block_of_edge_at(Vertex u, std::size_t i) const {
    return edge_block_[u][i];
  }

  bool is_cactus() const;
  bool is_block_graph() const;

 private:
  std::vector<Block> blocks_;
  std::vector<Vertex> cuts_;
  std::vector<std::vector<int>> blocks_of_;
  std::vector<std::vector<int>> edge_block_;
};

inline BlockCutTree block_cut_tree(const Graph& g) { return BlockCutTree(g); }

struct ClassFlags {
  bool is_tree = false;
  bool is_forest = false;
  bool is_cactus = false;
  bool is_block_graph = false;
  bool is_chordal = false;
  bool is_disjoint_cycles = false;
  std::optional<int> regular_degree;  // set iff every vertex has this degree

  bool is_d_regular(int d) const { return regular_degree == d; }
};

ClassFlags recognize(const Graph& g);

bool is_regular(const Graph& g, int d);

// Maximum cardinality search ordering reversed; returned only when it is a
// perfect elimination ordering, i.e. iff g is chordal. Each vertex's
// neighbors that come later in the ordering form a clique.
std::optional<std::vector<Vertex>> perfect_elimination_ordering(const Graph& g);

inline bool is_chordal(const Graph& g) {
  return perfect_elimination_ordering(g).has_value();
}

}  // namespace exactcol

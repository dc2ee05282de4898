#include "exactcol/block_graph.hpp"

#include <algorithm>

#include "exactcol/chromatic.hpp"
#include "exactcol/error.hpp"
#include "exactcol/structure.hpp"

namespace exactcol {
namespace {

void require_block_graph(const BlockCutTree& bct) {
  if (!bct.is_block_graph()) {
    throw Error(ErrorKind::kNotABlockGraph, "input is not a block graph");
  }
}

// Cuts `pool` (sorted) into consecutive classes of r.
void chunk(const std::vector<Vertex>& pool, int r, Partition& out) {
  for (std::size_t i = 0; i < pool.size(); i += r) {
    out.emplace_back(pool.begin() + i, pool.begin() + i + r);
  }
}

}  // namespace

std::optional<Partition> clique_factor(const Graph& g, int r) {
  if (r < 1) throw Error(ErrorKind::kBadParameter, "clique size must be >= 1");
  const BlockCutTree bct(g);
  require_block_graph(bct);
  const int n = g.order();
  Partition factor;
  if (r == 1) {
    for (Vertex v = 0; v < n; ++v) factor.push_back({v});
    return factor;
  }
  if (n % r != 0) return std::nullopt;

  const auto& blocks = bct.blocks();
  const int nb = static_cast<int>(blocks.size());
  for (Vertex v = 0; v < n; ++v) {
    if (bct.blocks_of(v).empty()) return std::nullopt;  // isolated
  }

  // Root every component's block-cut tree at its lowest-index block and list
  // blocks parent-first.
  std::vector<Vertex> parent_cut(nb, -1);
  std::vector<char> visited(nb, 0);
  std::vector<int> order;
  order.reserve(nb);
  for (int root = 0; root < nb; ++root) {
    if (visited[root]) continue;
    visited[root] = 1;
    std::size_t head = order.size();
    order.push_back(root);
    while (head < order.size()) {
      const int b = order[head++];
      for (Vertex c : blocks[b].vertices) {
        if (c == parent_cut[b]) continue;
        for (int child : bct.blocks_of(c)) {
          if (visited[child]) continue;
          visited[child] = 1;
          parent_cut[child] = c;
          order.push_back(child);
        }
      }
    }
  }

  // consumed[v]: v already sits in a class chosen by some block below.
  std::vector<char> consumed(n, 0);
  std::vector<Vertex> pool;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int b = *it;
    const Vertex c = parent_cut[b];
    pool.clear();
    for (Vertex v : blocks[b].vertices) {
      if (v != c && !consumed[v]) pool.push_back(v);
    }
    const int t = static_cast<int>(pool.size());
    if (t % r == 0) {
      chunk(pool, r, factor);
    } else if (t % r == r - 1 && c != -1) {
      if (consumed[c]) return std::nullopt;
      pool.insert(std::lower_bound(pool.begin(), pool.end(), c), c);
      chunk(pool, r, factor);
      consumed[c] = 1;
    } else {
      return std::nullopt;
    }
    for (Vertex v : pool) consumed[v] = 1;
  }
  std::sort(factor.begin(), factor.end());
  return factor;
}

SolveOutcome blockgraph_chi(const Graph& g, int d) {
  if (d < 0) throw Error(ErrorKind::kBadParameter, "d must be >= 0");
  const auto factor = clique_factor(g, d + 1);
  if (!factor) return SolveOutcome::infeasible();
  if (g.order() == 0) return SolveOutcome::finite(1, Coloring{1, {}});
  const Graph quotient = contract_partition(g, *factor);
  const ChromaticResult chromatic = chromatic_number(quotient);
  return SolveOutcome::finite(
      chromatic.chi,
      lift_quotient_coloring(*factor, chromatic.witness, g.order()));
}

DecisionResult blockgraph_solve(const Graph& g, int k, int d) {
  if (k < 1) throw Error(ErrorKind::kBadParameter, "k must be >= 1");
  const SolveOutcome outcome = blockgraph_chi(g, d);
  DecisionResult result;
  if (!outcome.is_finite() || outcome.chi() > k) return result;
  result.yes = true;
  result.witness = outcome.witness();
  result.witness.k = k;
  return result;
}

}  // namespace exactcol

#include "exactcol/structure.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace exactcol {
namespace {

BlockKind classify(const Block& block) {
  const std::size_t s = block.vertices.size();
  const std::size_t e = block.edges.size();
  if (s == 2) return BlockKind::kEdge;
  if (s == 3 && e == 3) return BlockKind::kCycle;
  if (e == s * (s - 1) / 2) return BlockKind::kClique;
  // A biconnected graph with as many edges as vertices is a cycle.
  if (e == s) return BlockKind::kCycle;
  return BlockKind::kOther;
}

std::vector<Vertex> walk_cycle(const Block& block) {
  const auto local = [&](Vertex v) {
    return static_cast<std::size_t>(
        std::lower_bound(block.vertices.begin(), block.vertices.end(), v) -
        block.vertices.begin());
  };
  std::vector<std::array<Vertex, 2>> next(block.vertices.size(), {-1, -1});
  for (const Edge& e : block.edges) {
    auto& a = next[local(e.u)];
    (a[0] == -1 ? a[0] : a[1]) = e.v;
    auto& b = next[local(e.v)];
    (b[0] == -1 ? b[0] : b[1]) = e.u;
  }
  std::vector<Vertex> order;
  order.reserve(block.vertices.size());
  Vertex prev = -1;
  Vertex cur = block.vertices.front();
  const auto& first = next[0];
  Vertex step = std::min(first[0], first[1]);
  order.push_back(cur);
  while (order.size() < block.vertices.size()) {
    prev = cur;
    cur = step;
    order.push_back(cur);
    const auto& around = next[local(cur)];
    step = around[0] == prev ? around[1] : around[0];
  }
  return order;
}

}  // namespace

bool is_clique_block(const Block& block) {
  return block.kind == BlockKind::kClique || block.kind == BlockKind::kEdge ||
         (block.kind == BlockKind::kCycle && block.vertices.size() == 3);
}

bool is_cycle_block(const Block& block) {
  return block.kind == BlockKind::kCycle;
}

BlockCutTree::BlockCutTree(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<Vertex> dfs;
  int clock = 0;

  const auto emit_block = [&](Vertex p, Vertex u) {
    Block block;
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      if (e.u > e.v) std::swap(e.u, e.v);
      block.edges.push_back(e);
      block.vertices.push_back(e.u);
      block.vertices.push_back(e.v);
      if ((e.u == p && e.v == u) || (e.u == u && e.v == p)) break;
    }
    std::sort(block.edges.begin(), block.edges.end());
    std::sort(block.vertices.begin(), block.vertices.end());
    block.vertices.erase(
        std::unique(block.vertices.begin(), block.vertices.end()),
        block.vertices.end());
    block.kind = classify(block);
    if (block.kind == BlockKind::kCycle) block.cycle_order = walk_cycle(block);
    blocks_.push_back(std::move(block));
  };

  // Iterative Hopcroft-Tarjan; recursion depth would be O(n).
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = clock++;
    dfs.push_back(root);
    while (!dfs.empty()) {
      const Vertex u = dfs.back();
      const auto nbrs = g.neighbors(u);
      if (cursor[u] < nbrs.size()) {
        const Vertex w = nbrs[cursor[u]++];
        if (w == parent[u]) continue;
        if (disc[w] == -1) {
          edge_stack.push_back({u, w});
          parent[w] = u;
          disc[w] = low[w] = clock++;
          dfs.push_back(w);
        } else if (disc[w] < disc[u]) {
          edge_stack.push_back({u, w});
          low[u] = std::min(low[u], disc[w]);
        }
        continue;
      }
      dfs.pop_back();
      const Vertex p = parent[u];
      if (p == -1) continue;
      low[p] = std::min(low[p], low[u]);
      if (low[u] >= disc[p]) emit_block(p, u);
    }
  }

  std::sort(blocks_.begin(), blocks_.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });

  blocks_of_.assign(n, {});
  edge_block_.assign(n, {});
  for (Vertex v = 0; v < n; ++v) edge_block_[v].assign(g.degree(v), -1);
  for (int b = 0; b < static_cast<int>(blocks_.size()); ++b) {
    for (Vertex v : blocks_[b].vertices) blocks_of_[v].push_back(b);
    for (const Edge& e : blocks_[b].edges) {
      const auto nu = g.neighbors(e.u);
      const auto nv = g.neighbors(e.v);
      edge_block_[e.u][std::lower_bound(nu.begin(), nu.end(), e.v) - nu.begin()] = b;
      edge_block_[e.v][std::lower_bound(nv.begin(), nv.end(), e.u) - nv.begin()] = b;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (blocks_of_[v].size() >= 2) cuts_.push_back(v);
  }
}

bool BlockCutTree::is_cactus() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Block& b) {
    return b.kind == BlockKind::kCycle || b.kind == BlockKind::kEdge;
  });
}

bool BlockCutTree::is_block_graph() const {
  return std::all_of(blocks_.begin(), blocks_.end(), is_clique_block);
}

bool is_regular(const Graph& g, int d) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

std::optional<std::vector<Vertex>> perfect_elimination_ordering(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(n, 0);
  std::vector<char> numbered(n, 0);
  std::vector<std::vector<Vertex>> buckets(n + 1);
  for (Vertex v = n - 1; v >= 0; --v) buckets[0].push_back(v);
  std::vector<Vertex> visit;
  visit.reserve(n);
  int top = 0;
  while (static_cast<int>(visit.size()) < n) {
    Vertex v = -1;
    while (v == -1) {
      auto& bucket = buckets[top];
      if (bucket.empty()) {
        --top;
        continue;
      }
      const Vertex cand = bucket.back();
      bucket.pop_back();
      if (!numbered[cand] && weight[cand] == top) v = cand;
    }
    numbered[v] = 1;
    visit.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (numbered[w]) continue;
      buckets[++weight[w]].push_back(w);
      top = std::max(top, weight[w]);
    }
  }

  // Elimination order is the reverse visit order.
  std::vector<Vertex> order(visit.rbegin(), visit.rend());
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  for (Vertex v : order) {
    Vertex first_later = -1;
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > position[v] &&
          (first_later == -1 || position[w] < position[first_later])) {
        first_later = w;
      }
    }
    if (first_later == -1) continue;
    for (Vertex w : g.neighbors(v)) {
      if (w != first_later && position[w] > position[v] &&
          !g.has_edge(first_later, w)) {
        return std::nullopt;
      }
    }
  }
  return order;
}

ClassFlags recognize(const Graph& g) {
  ClassFlags flags;
  const int n = g.order();
  const Components comps = connected_components(g);
  const std::size_t forest_edges = static_cast<std::size_t>(n - comps.count);
  flags.is_forest = g.size() == forest_edges;
  flags.is_tree = flags.is_forest && comps.count == 1;

  const BlockCutTree bct(g);
  flags.is_cactus = bct.is_cactus();
  flags.is_block_graph = bct.is_block_graph();
  flags.is_chordal = is_chordal(g);
  if (n > 0 && is_regular(g, g.degree(0))) flags.regular_degree = g.degree(0);
  flags.is_disjoint_cycles = n > 0 && flags.regular_degree == 2;
  return flags;
}

}  // namespace exactcol

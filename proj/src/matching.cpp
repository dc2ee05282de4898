#include "exactcol/matching.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <algorithm>
#include <queue>

namespace exactcol {
namespace {

struct MatchingSearch {
  const Graph& g;
  std::size_t limit;
  std::vector<char> used;
  std::vector<Edge> current;
  std::vector<Matching> found;

  void run(Vertex from) {
    if (found.size() >= limit) return;
    Vertex v = from;
    while (v < g.order() && used[v]) ++v;
    if (v == g.order()) {
      found.push_back(Matching{current});
      return;
    }
    used[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (used[w]) continue;
      used[w] = 1;
      current.push_back({v, w});
      run(v + 1);
      current.pop_back();
      used[w] = 0;
      if (found.size() >= limit) break;
    }
    used[v] = 0;
  }
};

}  // namespace

std::vector<Matching> perfect_matchings(const Graph& g, std::size_t limit) {
  if (g.order() % 2 != 0 || limit == 0) return {};
  MatchingSearch search{g, limit, std::vector<char>(g.order(), 0), {}, {}};
  search.run(0);
  return std::move(search.found);
}

bool has_perfect_matching(const Graph& g) {
  if (g.order() % 2 != 0) return false;
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(g.order());
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(
      g.order());
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  return 2 * boost::matching_size(bg, &mate[0]) ==
         static_cast<std::size_t>(g.order());
}

std::vector<Edge> forest_perfect_matching(const Graph& g) {
  const int n = g.order();
  if (n % 2 != 0) return {};
  std::vector<int> live_degree(n);
  std::vector<char> removed(n, 0);
  std::queue<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    live_degree[v] = g.degree(v);
    if (live_degree[v] <= 1) leaves.push(v);
  }
  std::vector<Edge> matching;
  while (!leaves.empty()) {
    const Vertex leaf = leaves.front();
    leaves.pop();
    if (removed[leaf]) continue;
    Vertex partner = -1;
    for (Vertex w : g.neighbors(leaf)) {
      if (!removed[w]) partner = w;
    }
    if (partner == -1) return {};  // isolated after removals
    removed[leaf] = removed[partner] = 1;
    matching.push_back({std::min(leaf, partner), std::max(leaf, partner)});
    for (Vertex w : g.neighbors(partner)) {
      if (removed[w]) continue;
      if (--live_degree[w] <= 1) leaves.push(w);
    }
  }
  if (2 * matching.size() != static_cast<std::size_t>(n)) return {};
  std::sort(matching.begin(), matching.end());
  return matching;
}

std::vector<std::vector<Vertex>> matching_classes(const Matching& m) {
  std::vector<std::vector<Vertex>> parts;
  parts.reserve(m.edges.size());
  for (const Edge& e : m.edges) parts.push_back({e.u, e.v});
  return parts;
}

}  // namespace exactcol

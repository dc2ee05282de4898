#pragma once

// Independent reference implementations for tests: plain enumeration with no
// pruning, sharing nothing with the library except Graph.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "exactcol/graph.hpp"

namespace exactcol::oracle_ref {

// Same-colored neighbor count, computed from the edge list.
inline bool exact_by_edges(const Graph& g, const std::vector<int>& color, int d) {
  std::vector<int> same(g.order(), 0);
  for (const Edge& e : g.edges()) {
    if (color[e.u] == color[e.v]) {
      ++same[e.u];
      ++same[e.v];
    }
  }
  for (int s : same) {
    if (s != d) return false;
  }
  return true;
}

// Walks all k^n colorings; calls f(color) until it returns true.
template <typename F>
bool for_each_coloring(int n, int k, F&& f) {
  std::vector<int> color(n, 0);
  while (true) {
    if (f(color)) return true;
    int i = 0;
    while (i < n && ++color[i] == k) color[i++] = 0;
    if (i == n) return false;
  }
}

inline bool exists_exact(const Graph& g, int k, int d) {
  if (g.order() == 0) return true;
  return for_each_coloring(g.order(), k, [&](const std::vector<int>& c) {
    return exact_by_edges(g, c, d);
  });
}

// Exact d-defective chromatic number by raw enumeration; nullopt = infinite.
// Only for n <= 8 or so.
inline std::optional<int> exhaustive_chi_d(const Graph& g, int d) {
  for (int k = 1; k <= std::max(1, g.order()); ++k) {
    if (exists_exact(g, k, d)) return k;
  }
  return std::nullopt;
}

inline int exhaustive_chromatic(const Graph& g) {
  for (int k = 1;; ++k) {
    if (g.order() == 0 || exists_exact(g, k, 0)) return k;
  }
}

// Perfect matchings counted by filtering edge subsets of size n/2.
inline std::uint64_t count_perfect_matchings_by_subsets(const Graph& g) {
  const int n = g.order();
  if (n % 2 != 0) return 0;
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (__builtin_popcountll(mask) != n / 2) continue;
    std::vector<char> used(n, 0);
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      if (used[edges[i].u] || used[edges[i].v]) ok = false;
      used[edges[i].u] = used[edges[i].v] = 1;
    }
    count += ok;
  }
  return count;
}

// Number of partitions of V into classes of size r inducing K_r.
inline std::uint64_t count_clique_factors(const Graph& g, int r) {
  const int n = g.order();
  std::vector<char> used(n, 0);
  std::uint64_t count = 0;
  std::function<void()> next_class;
  std::function<void(std::vector<int>, int)> grow = [&](std::vector<int> cls, int from) {
    if (static_cast<int>(cls.size()) == r) {
      for (std::size_t i = 1; i < cls.size(); ++i) used[cls[i]] = 1;
      next_class();
      for (std::size_t i = 1; i < cls.size(); ++i) used[cls[i]] = 0;
      return;
    }
    for (int v = from; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int u : cls) ok = ok && g.has_edge(u, v);
      if (!ok) continue;
      auto more = cls;
      more.push_back(v);
      grow(std::move(more), v + 1);
    }
  };
  next_class = [&] {
    int first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      ++count;
      return;
    }
    used[first] = 1;
    grow({first}, first + 1);
    used[first] = 0;
  };
  next_class();
  return count;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

}  // namespace exactcol::oracle_ref

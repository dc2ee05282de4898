#include "exactcol/closed_form.hpp"

#include <queue>
#include <string>

#include "exactcol/contraction.hpp"
#include "exactcol/error.hpp"
#include "exactcol/matching.hpp"
#include "exactcol/structure.hpp"

namespace exactcol {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::kBadParameter, what);
}

std::vector<int> two_color_forest(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          queue.push(w);
        }
      }
    }
  }
  return side;
}

// Walks a connected 2-regular graph from vertex `start`.
std::vector<Vertex> cycle_walk(const Graph& g, Vertex start) {
  std::vector<Vertex> order = {start};
  Vertex prev = start;
  Vertex cur = g.neighbors(start)[0];
  while (cur != start) {
    order.push_back(cur);
    const auto nbrs = g.neighbors(cur);
    const Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace

SolveOutcome chi_cycle(int n, int d) {
  require(n >= 3, "cycle needs n >= 3");
  require(d >= 1, "cycle closed form covers d >= 1");
  if (d > 2) return SolveOutcome::infeasible();
  if (d == 2) return SolveOutcome::finite(1, Coloring{1, std::vector<int>(n, 0)});
  if (n % 2 != 0) return SolveOutcome::infeasible();
  // Matched pairs {2p, 2p+1} alternate colors around the cycle; when the
  // pair count is odd the last pair takes a third color.
  const int pairs = n / 2;
  const int chi = n % 4 == 0 ? 2 : 3;
  Coloring c{chi, std::vector<int>(n)};
  for (int v = 0; v < n; ++v) {
    const int p = v / 2;
    c.assign[v] = (chi == 3 && p == pairs - 1) ? 2 : p % 2;
  }
  return SolveOutcome::finite(chi, std::move(c));
}

SolveOutcome chi_wheel(int n, int d) {
  require(n >= 4, "wheel needs n >= 4");
  require(d == 1, "wheel closed form covers d = 1 only");
  if (n % 2 != 0) return SolveOutcome::infeasible();
  // Matching {0,1}, {2,3}, ...: the hub pair is universal in the quotient
  // and the rim pairs form a path, so the quotient is a fan.
  Coloring c{n == 4 ? 2 : 3, std::vector<int>(n)};
  for (int v = 0; v < n; ++v) {
    const int p = v / 2;
    c.assign[v] = p == 0 ? 0 : 1 + (p - 1) % 2;
  }
  const int chi = c.k;
  return SolveOutcome::finite(chi, std::move(c));
}

SolveOutcome chi_tree(const Graph& g, int d) {
  if (g.order() == 0 || !recognize(g).is_tree) {
    throw Error(ErrorKind::kNotATree, "input is not a tree");
  }
  require(d >= 0, "d must be >= 0");
  const int n = g.order();
  if (n == 1) {
    if (d == 0) return SolveOutcome::finite(1, Coloring{1, {0}});
    return SolveOutcome::infeasible();
  }
  if (d == 0) return SolveOutcome::finite(2, Coloring{2, two_color_forest(g)});
  if (d >= 2) return SolveOutcome::infeasible();

  const std::vector<Edge> matching = forest_perfect_matching(g);
  if (matching.empty()) return SolveOutcome::infeasible();
  Partition parts;
  for (const Edge& e : matching) parts.push_back({e.u, e.v});
  const Graph quotient = contract_partition(g, parts);
  const std::vector<int> side = two_color_forest(quotient);
  const int chi = quotient.order() == 1 ? 1 : 2;
  Coloring c{chi, std::vector<int>(n)};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (Vertex v : parts[i]) c.assign[v] = side[i];
  }
  return SolveOutcome::finite(chi, std::move(c));
}

SolveOutcome chi_complete(int n, int d) {
  require(n >= 1, "complete graph needs n >= 1");
  require(d >= 0, "d must be >= 0");
  if (n % (d + 1) != 0) return SolveOutcome::infeasible();
  const int chi = n / (d + 1);
  Coloring c{chi, std::vector<int>(n)};
  for (int v = 0; v < n; ++v) c.assign[v] = v / (d + 1);
  return SolveOutcome::finite(chi, std::move(c));
}

int clique_lower_bound(const Graph& g, int d, std::uint64_t budget) {
  require(d >= 0, "d must be >= 0");
  const int omega = clique_number(g, budget);
  return std::max(1, (omega + d) / (d + 1));
}

std::optional<SolveOutcome> chi_regular_trivial(const Graph& g, int d) {
  if (g.order() == 0 || !is_regular(g, d)) return std::nullopt;
  return SolveOutcome::finite(1, Coloring{1, std::vector<int>(g.order(), 0)});
}

std::optional<FamilyMatch> match_family(const Graph& g) {
  const int n = g.order();
  if (n == 0 || connected_components(g).count != 1) return std::nullopt;
  const std::size_t m = g.size();
  std::vector<Vertex> identity(n);
  for (int v = 0; v < n; ++v) identity[v] = v;

  if (m == static_cast<std::size_t>(n) * (n - 1) / 2) {
    return FamilyMatch{{Family::kComplete, n}, identity};
  }
  if (n >= 3 && is_regular(g, 2)) {
    return FamilyMatch{{Family::kCycle, n}, cycle_walk(g, 0)};
  }
  if (n >= 5 && m == 2 * static_cast<std::size_t>(n - 1)) {
    Vertex hub = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) == n - 1) {
        hub = v;
      } else if (g.degree(v) != 3) {
        return std::nullopt;
      }
    }
    if (hub == -1) return std::nullopt;
    std::vector<Vertex> rim;
    for (Vertex v = 0; v < n; ++v) {
      if (v != hub) rim.push_back(v);
    }
    const Graph rim_graph = induced_subgraph(g, rim);
    if (connected_components(rim_graph).count != 1) return std::nullopt;
    std::vector<Vertex> order = {hub};
    for (Vertex local : cycle_walk(rim_graph, 0)) order.push_back(rim[local]);
    return FamilyMatch{{Family::kWheel, n}, order};
  }
  return std::nullopt;
}

SolveOutcome relabel_outcome(const SolveOutcome& canonical,
                             const FamilyMatch& match) {
  if (!canonical.is_finite()) return canonical;
  const Coloring& src = canonical.witness();
  Coloring c{src.k, std::vector<int>(src.assign.size())};
  for (std::size_t i = 0; i < src.assign.size(); ++i) {
    c.assign[match.canonical_to_input[i]] = src.assign[i];
  }
  return SolveOutcome::finite(canonical.chi(), std::move(c));
}

}  // namespace exactcol

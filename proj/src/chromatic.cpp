#include "exactcol/chromatic.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "exactcol/error.hpp"
#include "exactcol/structure.hpp"

namespace exactcol {
namespace {

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t budget) : remaining_(budget) {}

  void tick(const char* what) {
    if (remaining_ == 0) {
      throw BudgetExceeded(std::string(what) + ": node budget exhausted");
    }
    --remaining_;
  }

 private:
  std::uint64_t remaining_;
};

// Greedy coloring in reverse elimination order; optimal on chordal graphs.
Coloring chordal_coloring(const Graph& g, const std::vector<Vertex>& peo) {
  Coloring c{0, std::vector<int>(g.order(), -1)};
  std::vector<int> stamp(g.order() + 1, -1);
  for (auto it = peo.rbegin(); it != peo.rend(); ++it) {
    const Vertex v = *it;
    for (Vertex w : g.neighbors(v)) {
      if (c.assign[w] >= 0) stamp[c.assign[w]] = v;
    }
    int color = 0;
    while (stamp[color] == v) ++color;
    c.assign[v] = color;
    c.k = std::max(c.k, color + 1);
  }
  return c;
}

std::vector<Vertex> chordal_max_clique(const Graph& g,
                                       const std::vector<Vertex>& peo) {
  std::vector<int> position(g.order());
  for (int i = 0; i < g.order(); ++i) position[peo[i]] = i;
  std::vector<Vertex> best;
  for (Vertex v : peo) {
    std::vector<Vertex> clique = {v};
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > position[v]) clique.push_back(w);
    }
    if (clique.size() > best.size()) best = std::move(clique);
  }
  std::sort(best.begin(), best.end());
  return best;
}

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, NodeCounter& counter) : g_(g), counter_(counter) {}

  std::vector<Vertex> run() {
    std::vector<Vertex> candidates(g_.order());
    std::iota(candidates.begin(), candidates.end(), 0);
    std::stable_sort(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
      return g_.degree(a) > g_.degree(b);
    });
    expand(candidates);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Greedy color classes over `p`; returns p reordered by color with the
  // color bound of each position.
  void color_sort(std::vector<Vertex>& p, std::vector<int>& bound) const {
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v : p) {
      std::size_t k = 0;
      for (; k < classes.size(); ++k) {
        const bool clash = std::any_of(classes[k].begin(), classes[k].end(),
                                       [&](Vertex w) { return g_.has_edge(v, w); });
        if (!clash) break;
      }
      if (k == classes.size()) classes.emplace_back();
      classes[k].push_back(v);
    }
    p.clear();
    bound.clear();
    for (std::size_t k = 0; k < classes.size(); ++k) {
      for (Vertex v : classes[k]) {
        p.push_back(v);
        bound.push_back(static_cast<int>(k) + 1);
      }
    }
  }

  void expand(std::vector<Vertex> p) {
    counter_.tick("maximum_clique");
    std::vector<int> bound;
    color_sort(p, bound);
    while (!p.empty()) {
      if (current_.size() + bound.back() <= best_.size()) return;
      const Vertex v = p.back();
      p.pop_back();
      bound.pop_back();
      current_.push_back(v);
      std::vector<Vertex> next;
      for (Vertex w : p) {
        if (g_.has_edge(v, w)) next.push_back(w);
      }
      if (next.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
    }
  }

  const Graph& g_;
  NodeCounter& counter_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

std::vector<Vertex> max_clique_impl(const Graph& g, NodeCounter& counter) {
  if (g.order() == 0) return {};
  if (auto peo = perfect_elimination_ordering(g)) {
    return chordal_max_clique(g, *peo);
  }
  return CliqueSearch(g, counter).run();
}

// Backtracking k-coloring with DSATUR vertex selection. The first vertex
// chosen always gets color 0 and a new color is only opened as the next
// unused one.
class KColorSearch {
 public:
  KColorSearch(const Graph& g, int k, NodeCounter& counter)
      : g_(g),
        k_(k),
        counter_(counter),
        color_(g.order(), -1),
        seen_(static_cast<std::size_t>(g.order()) * k, 0),
        saturation_(g.order(), 0) {}

  std::optional<Coloring> run() {
    if (g_.order() == 0) return Coloring{k_, {}};
    if (k_ <= 0) return std::nullopt;
    if (!solve(0, 0)) return std::nullopt;
    return Coloring{k_, color_};
  }

 private:
  int& seen(Vertex v, int c) { return seen_[static_cast<std::size_t>(v) * k_ + c]; }

  Vertex select() const {
    Vertex best = -1;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (color_[v] != -1) continue;
      if (best == -1 || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best))) {
        best = v;
      }
    }
    return best;
  }

  void paint(Vertex v, int c) {
    color_[v] = c;
    for (Vertex w : g_.neighbors(v)) {
      if (seen(w, c)++ == 0) ++saturation_[w];
    }
  }

  void unpaint(Vertex v) {
    const int c = color_[v];
    color_[v] = -1;
    for (Vertex w : g_.neighbors(v)) {
      if (--seen(w, c) == 0) --saturation_[w];
    }
  }

  bool solve(int colored, int used) {
    if (colored == g_.order()) return true;
    counter_.tick("chromatic_number");
    const Vertex v = select();
    if (saturation_[v] >= k_) return false;
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (seen(v, c) != 0) continue;
      paint(v, c);
      if (solve(colored + 1, std::max(used, c + 1))) return true;
      unpaint(v);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  NodeCounter& counter_;
  std::vector<int> color_;
  std::vector<int> seen_;
  std::vector<int> saturation_;
};

ChromaticResult connected_chromatic(const Graph& g, NodeCounter& counter) {
  if (g.order() == 0) return {0, Coloring{0, {}}};
  if (auto peo = perfect_elimination_ordering(g)) {
    Coloring c = chordal_coloring(g, *peo);
    return {c.k, std::move(c)};
  }
  const int lower = static_cast<int>(max_clique_impl(g, counter).size());
  Coloring upper = dsatur_coloring(g);
  for (int k = lower; k < upper.k; ++k) {
    if (auto found = KColorSearch(g, k, counter).run()) {
      return {k, std::move(*found)};
    }
  }
  return {upper.k, std::move(upper)};
}

}  // namespace

Coloring dsatur_coloring(const Graph& g) {
  const int n = g.order();
  Coloring c{0, std::vector<int>(n, -1)};
  std::vector<std::vector<char>> neighbor_has(
      n, std::vector<char>(g.max_degree() + 2, 0));
  std::vector<int> saturation(n, 0);
  for (int step = 0; step < n; ++step) {
    Vertex v = -1;
    for (Vertex u = 0; u < n; ++u) {
      if (c.assign[u] != -1) continue;
      if (v == -1 || saturation[u] > saturation[v] ||
          (saturation[u] == saturation[v] && g.degree(u) > g.degree(v))) {
        v = u;
      }
    }
    int color = 0;
    while (neighbor_has[v][color]) ++color;
    c.assign[v] = color;
    c.k = std::max(c.k, color + 1);
    for (Vertex w : g.neighbors(v)) {
      if (!neighbor_has[w][color]) {
        neighbor_has[w][color] = 1;
        ++saturation[w];
      }
    }
  }
  return c;
}

bool k_colorable(const Graph& g, int k, Coloring* witness, std::uint64_t budget) {
  NodeCounter counter(budget);
  auto found = KColorSearch(g, k, counter).run();
  if (found && witness != nullptr) *witness = std::move(*found);
  return found.has_value();
}

std::vector<Vertex> maximum_clique(const Graph& g, std::uint64_t budget) {
  NodeCounter counter(budget);
  const Components comps = connected_components(g);
  std::vector<Vertex> best;
  for (const auto& members : comps.members()) {
    if (members.size() <= best.size()) continue;
    const Graph h = induced_subgraph(g, members);
    std::vector<Vertex> local = max_clique_impl(h, counter);
    if (local.size() > best.size()) {
      best.clear();
      for (Vertex v : local) best.push_back(members[v]);
    }
  }
  std::sort(best.begin(), best.end());
  return best;
}

ChromaticResult chromatic_number(const Graph& g, std::uint64_t budget) {
  NodeCounter counter(budget);
  ChromaticResult result{0, Coloring{0, std::vector<int>(g.order(), 0)}};
  const Components comps = connected_components(g);
  if (comps.count == 1) {
    ChromaticResult single = connected_chromatic(g, counter);
    return single;
  }
  for (const auto& members : comps.members()) {
    const Graph h = induced_subgraph(g, members);
    const ChromaticResult part = connected_chromatic(h, counter);
    for (std::size_t i = 0; i < members.size(); ++i) {
      result.witness.assign[members[i]] = part.witness.assign[i];
    }
    result.chi = std::max(result.chi, part.chi);
  }
  result.witness.k = result.chi;
  return result;
}

}  // namespace exactcol

#include "exactcol/cactus.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "exactcol/chromatic.hpp"
#include "exactcol/contraction.hpp"
#include "exactcol/error.hpp"
#include "exactcol/matching.hpp"
#include "exactcol/structure.hpp"

namespace exactcol {
namespace {

class Labeler {
 public:
  Labeler(const CactusAux& aux, ColorRange range)
      : aux_(aux),
        range_(range),
        labels_(aux.aux.order(), Label::kUnlabeled),
        unlabeled_(aux.aux.order()) {}

  LabelResult run(std::span<const int> scan_order) {
    LabelResult result;
    for (const auto& clique : aux_.cliques) {
      if (clique.empty()) return reject(RejectReason::kUncoveredVertex);
    }
    set(CactusAux::x(), Label::kM);
    for (int i = 0; i < aux_.cycle_count(); ++i) {
      if (aux_.w_of_cycle[i] < 0) continue;
      set(aux_.w_of_cycle[i], Label::kP);
      set(CactusAux::v(i), Label::kM);
      if (!local_m(CactusAux::v(i))) {
        return reject(RejectReason::kTwoSimplicialCyclesTouch);
      }
    }

    std::vector<int> order(scan_order.begin(), scan_order.end());
    if (order.empty()) {
      order.resize(aux_.num_vertices);
      for (int j = 0; j < aux_.num_vertices; ++j) order[j] = j;
    }
    while (unlabeled_ > 0) {
      ++passes_;
      const int before = unlabeled_;
      for (int j : order) {
        const auto& clique = aux_.cliques[j];
        int free_vertex = -1;
        int free_count = 0;
        bool has_m = false;
        for (int cycle : clique) {
          const Label l = labels_[CactusAux::v(cycle)];
          if (l == Label::kM) has_m = true;
          if (l == Label::kUnlabeled) {
            if (free_vertex == -1) free_vertex = CactusAux::v(cycle);
            ++free_count;
          }
        }
        if (free_vertex == -1) continue;
        if (has_m) {
          set(free_vertex, Label::kP);
          if (auto why = local_p(free_vertex)) return reject(*why);
          continue;
        }
        if (free_count == 1) {
          // Every other member is labeled P.
          set(free_vertex, Label::kM);
          if (!local_m(free_vertex)) return reject(RejectReason::kAdjacentM);
          continue;
        }
      }
      if (unlabeled_ == before) {
        throw std::logic_error("cactus_label: repeat loop made no progress");
      }
    }
    result.labeling = CycleLabeling{labels_};
    result.passes = passes_;
    return result;
  }

 private:
  LabelResult reject(RejectReason reason) const {
    LabelResult r;
    r.reason = reason;
    r.passes = passes_;
    return r;
  }

  void set(int aux_vertex, Label label) {
    if (labels_[aux_vertex] == Label::kUnlabeled) --unlabeled_;
    labels_[aux_vertex] = label;
  }

  bool local_m(int aux_vertex) const {
    for (Vertex w : aux_.aux.neighbors(aux_vertex)) {
      if (labels_[w] == Label::kM) return false;
    }
    return true;
  }

  // Only the cliques through the newly labeled cycle can have become
  // all-P; every other clique was checked when its last member got P.
  std::optional<RejectReason> local_p(int aux_vertex) const {
    const auto& cycle = aux_.cycles[aux_vertex - 1];
    if (range_ == ColorRange::kTwo && cycle.size() % 2 != 0) {
      return RejectReason::kOddPCycle;
    }
    for (Vertex u : cycle) {
      const auto& clique = aux_.cliques[u];
      const bool all_p = std::all_of(clique.begin(), clique.end(), [&](int c) {
        return labels_[CactusAux::v(c)] == Label::kP;
      });
      if (all_p) return RejectReason::kAllPClique;
    }
    return std::nullopt;
  }

  const CactusAux& aux_;
  ColorRange range_;
  std::vector<Label> labels_;
  int unlabeled_;
  int passes_ = 0;
};

void require_cactus(const BlockCutTree& bct) {
  if (!bct.is_cactus()) throw Error(ErrorKind::kNotACactus, "input is not a cactus");
}

// Smallest-last greedy coloring; at most 3 colors on 2-degenerate graphs
// such as outerplanar quotients.
Coloring degeneracy_coloring(const Graph& g) {
  const int n = g.order();
  std::vector<int> degree(n);
  std::vector<char> removed(n, 0);
  std::vector<std::vector<Vertex>> buckets(g.max_degree() + 1);
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    buckets[degree[v]].push_back(v);
  }
  std::vector<Vertex> peel;
  int low = 0;
  while (static_cast<int>(peel.size()) < n) {
    low = std::max(0, low - 1);
    while (buckets[low].empty()) ++low;
    const Vertex v = buckets[low].back();
    buckets[low].pop_back();
    if (removed[v] || degree[v] != low) continue;
    removed[v] = 1;
    peel.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w]) buckets[--degree[w]].push_back(w);
    }
  }
  Coloring c{0, std::vector<int>(n, -1)};
  std::vector<char> taken;
  for (auto it = peel.rbegin(); it != peel.rend(); ++it) {
    taken.assign(g.degree(*it) + 2, 0);
    for (Vertex w : g.neighbors(*it)) {
      if (c.assign[w] >= 0 && c.assign[w] < static_cast<int>(taken.size())) {
        taken[c.assign[w]] = 1;
      }
    }
    int color = 0;
    while (taken[color]) ++color;
    c.assign[*it] = color;
    c.k = std::max(c.k, color + 1);
  }
  return c;
}

}  // namespace

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::kUncoveredVertex: return "UNCOVERED_VERTEX";
    case RejectReason::kTwoSimplicialCyclesTouch: return "TWO_SIMPLICIAL_CYCLES_TOUCH";
    case RejectReason::kOddPCycle: return "ODD_P_CYCLE";
    case RejectReason::kAllPClique: return "ALL_P_CLIQUE";
    case RejectReason::kAdjacentM: return "ADJACENT_M";
  }
  return "UNKNOWN";
}

CactusAux cactus_preprocess(const Graph& g) {
  const BlockCutTree bct(g);
  require_cactus(bct);
  CactusAux aux;
  const int n = g.order();
  aux.num_vertices = n;

  std::vector<int> cycle_of_block(bct.blocks().size(), -1);
  for (std::size_t b = 0; b < bct.blocks().size(); ++b) {
    const Block& block = bct.blocks()[b];
    if (!is_cycle_block(block)) continue;
    cycle_of_block[b] = static_cast<int>(aux.cycles.size());
    aux.cycles.push_back(block.cycle_order);
  }
  const int r = aux.cycle_count();

  aux.cliques.assign(n, {});
  for (int i = 0; i < r; ++i) {
    for (Vertex u : aux.cycles[i]) aux.cliques[u].push_back(i);
  }
  for (auto& clique : aux.cliques) std::sort(clique.begin(), clique.end());

  std::vector<Edge> aux_edges;
  int next_id = 1 + r;
  aux.w_of_cycle.assign(r, -1);
  for (int i = 0; i < r; ++i) {
    const bool has_simplicial =
        std::any_of(aux.cycles[i].begin(), aux.cycles[i].end(),
                    [&](Vertex u) { return aux.cliques[u].size() == 1; });
    if (!has_simplicial) continue;
    const int w = next_id++;
    aux.w_of_cycle[i] = w;
    aux_edges.push_back({w, CactusAux::v(i)});
    aux_edges.push_back({w, CactusAux::x()});
  }
  // V_i and V_j share a vertex iff both appear in some clique U_u.
  for (const auto& clique : aux.cliques) {
    for (std::size_t a = 0; a < clique.size(); ++a) {
      for (std::size_t b = a + 1; b < clique.size(); ++b) {
        aux_edges.push_back({CactusAux::v(clique[a]), CactusAux::v(clique[b])});
      }
    }
  }
  aux.aux = Graph(next_id, aux_edges);

  aux.edge_cycle.assign(n, {});
  for (Vertex u = 0; u < n; ++u) {
    aux.edge_cycle[u].resize(g.degree(u));
    for (std::size_t i = 0; i < aux.edge_cycle[u].size(); ++i) {
      aux.edge_cycle[u][i] = cycle_of_block[bct.block_of_edge_at(u, i)];
    }
  }
  return aux;
}

LabelResult cactus_label(const CactusAux& aux, ColorRange range,
                         std::span<const int> scan_order) {
  if (!scan_order.empty() &&
      static_cast<int>(scan_order.size()) != aux.num_vertices) {
    throw Error(ErrorKind::kBadParameter, "scan order must list every vertex");
  }
  return Labeler(aux, range).run(scan_order);
}

Coloring cactus_extract_coloring(const Graph& g, const CactusAux& aux,
                                 const CycleLabeling& labeling, int k) {
  if (k < 2) throw Error(ErrorKind::kBadParameter, "extraction needs k >= 2");
  for (int i = 0; i < aux.cycle_count(); ++i) {
    if (labeling.of_cycle(i) == Label::kUnlabeled) {
      throw Error(ErrorKind::kIncompleteLabeling,
                  "cycle " + std::to_string(i) + " is unlabeled");
    }
  }
  const int n = g.order();
  Coloring c{k, std::vector<int>(n, -1)};
  const auto other = [](int color) { return color == 0 ? 1 : 0; };

  // Paints a whole cycle entered at `entry`, whose color is already fixed.
  const auto paint_cycle = [&](int cycle, Vertex entry, std::queue<Vertex>& queue) {
    const auto& ring = aux.cycles[cycle];
    const auto at = std::find(ring.begin(), ring.end(), entry) - ring.begin();
    const std::size_t len = ring.size();
    const Label label = labeling.of_cycle(cycle);
    int prev = c.assign[entry];
    for (std::size_t step = 1; step < len; ++step) {
      const Vertex v = ring[(at + step) % len];
      int color = prev;
      if (label == Label::kP) {
        if (k == 2) {
          color = 1 - prev;
        } else {
          const bool closes = step + 1 == len;
          color = 0;
          while (color == prev || (closes && color == c.assign[entry])) ++color;
        }
      }
      c.assign[v] = color;
      queue.push(v);
      prev = color;
    }
  };

  std::queue<Vertex> queue;
  for (Vertex start = 0; start < n; ++start) {
    if (c.assign[start] != -1) continue;
    c.assign[start] = 0;
    queue.push(start);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      const auto nbrs = g.neighbors(u);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const Vertex w = nbrs[i];
        if (c.assign[w] != -1) continue;
        const int cycle = aux.edge_cycle[u][i];
        if (cycle >= 0) {
          paint_cycle(cycle, u, queue);
        } else {
          c.assign[w] = other(c.assign[u]);
          queue.push(w);
        }
      }
    }
  }
  return c;
}

SolveOutcome cactus_chi2(const Graph& g) {
  require_cactus(BlockCutTree(g));
  if (g.order() == 0) return SolveOutcome::finite(1, Coloring{1, {}});
  if (is_regular(g, 2)) {
    return SolveOutcome::finite(1, Coloring{1, std::vector<int>(g.order(), 0)});
  }
  const CactusAux aux = cactus_preprocess(g);
  const LabelResult two = cactus_label(aux, ColorRange::kTwo);
  if (two.accepted()) {
    return SolveOutcome::finite(2, cactus_extract_coloring(g, aux, *two.labeling, 2));
  }
  const LabelResult many = cactus_label(aux, ColorRange::kMany);
  if (many.accepted()) {
    return SolveOutcome::finite(3, cactus_extract_coloring(g, aux, *many.labeling, 3));
  }
  return SolveOutcome::infeasible();
}

CactusChi1Result cactus_chi1(const Graph& g, std::size_t matching_cap) {
  require_cactus(BlockCutTree(g));
  CactusChi1Result result;
  if (g.order() == 0) {
    result.best = SolveOutcome::finite(1, Coloring{1, {}});
    result.lower_bound = 1;
    return result;
  }
  if (!has_perfect_matching(g)) return result;
  if (is_regular(g, 1)) {
    result.best = SolveOutcome::finite(1, Coloring{1, std::vector<int>(g.order(), 0)});
    result.lower_bound = 1;
    return result;
  }
  result.lower_bound = 2;

  const auto matchings = perfect_matchings(g, matching_cap);
  for (const Matching& m : matchings) {
    const Partition parts = matching_classes(m);
    const Graph quotient = contract_partition(g, parts);
    if (!is_bipartite(quotient)) continue;
    const ChromaticResult chromatic = chromatic_number(quotient);
    result.best = SolveOutcome::finite(
        2, lift_quotient_coloring(parts, chromatic.witness, g.order()));
    return result;
  }

  const Partition parts = matching_classes(matchings.front());
  const Graph quotient = contract_partition(g, parts);
  Coloring three = degeneracy_coloring(quotient);
  if (three.k > 3) three = chromatic_number(quotient).witness;
  three.k = 3;
  result.best =
      SolveOutcome::finite(3, lift_quotient_coloring(parts, three, g.order()));
  result.exact = matchings.size() < matching_cap;
  return result;
}

}  // namespace exactcol

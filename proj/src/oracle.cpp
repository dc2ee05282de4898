#include "exactcol/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "exactcol/error.hpp"

namespace exactcol {
namespace {

class SharedBudget {
 public:
  explicit SharedBudget(std::uint64_t budget)
      : remaining_(budget > static_cast<std::uint64_t>(
                                std::numeric_limits<std::int64_t>::max())
                       ? std::numeric_limits<std::int64_t>::max()
                       : static_cast<std::int64_t>(budget)) {}

  void tick(const char* what) {
    if (remaining_.fetch_sub(1, std::memory_order_relaxed) <= 0) {
      throw BudgetExceeded(std::string(what) + ": node budget exhausted");
    }
  }

 private:
  std::atomic<std::int64_t> remaining_;
};

// Backtracking over colorings of a connected graph in vertex index order.
class ExactSearch {
 public:
  ExactSearch(const Graph& g, int k, int d, SharedBudget& budget)
      : g_(g),
        k_(k),
        d_(d),
        budget_(budget),
        color_(g.order(), -1),
        same_(g.order(), 0),
        open_(g.order(), 0) {
    for (Vertex v = 0; v < g.order(); ++v) open_[v] = g.degree(v);
  }

  // Colors v with c, updating counters; returns whether the partial
  // assignment is still extendable as far as local counts can tell.
  bool assign(Vertex v, int c) {
    color_[v] = c;
    for (Vertex w : g_.neighbors(v)) {
      --open_[w];
      if (color_[w] == c) {
        ++same_[w];
        ++same_[v];
      }
    }
    if (!viable(v)) return false;
    for (Vertex w : g_.neighbors(v)) {
      if (color_[w] != -1 && !viable(w)) return false;
    }
    return true;
  }

  void unassign(Vertex v) {
    const int c = color_[v];
    for (Vertex w : g_.neighbors(v)) {
      ++open_[w];
      if (color_[w] == c) {
        --same_[w];
        --same_[v];
      }
    }
    color_[v] = -1;
  }

  // Extends colors of vertices [next, n); `top` is the largest color used.
  bool solve(Vertex next, int top) {
    if (next == g_.order()) return true;
    budget_.tick("brute_solve");
    const int limit = std::min(k_, top + 2);
    for (int c = 0; c < limit; ++c) {
      const bool ok = assign(next, c);
      if (ok && solve(next + 1, std::max(top, c))) return true;
      unassign(next);
    }
    return false;
  }

  // Valid partial colorings of the first `depth` vertices, in search order.
  void prefixes(Vertex next, int top, int depth,
                std::vector<std::vector<int>>& out) {
    if (next == depth) {
      out.emplace_back(color_.begin(), color_.begin() + depth);
      return;
    }
    budget_.tick("brute_solve");
    const int limit = std::min(k_, top + 2);
    for (int c = 0; c < limit; ++c) {
      if (assign(next, c)) prefixes(next + 1, std::max(top, c), depth, out);
      unassign(next);
    }
  }

  const std::vector<int>& colors() const { return color_; }

 private:
  bool viable(Vertex v) const {
    return same_[v] <= d_ && same_[v] + open_[v] >= d_;
  }

  const Graph& g_;
  int k_;
  int d_;
  SharedBudget& budget_;
  std::vector<int> color_;
  std::vector<int> same_;
  std::vector<int> open_;
};

std::optional<std::vector<int>> solve_sequential(const Graph& g, int k, int d,
                                                 SharedBudget& budget) {
  ExactSearch search(g, k, d, budget);
  if (search.solve(0, -1)) return search.colors();
  return std::nullopt;
}

std::optional<std::vector<int>> solve_parallel(const Graph& g, int k, int d,
                                               int threads,
                                               SharedBudget& budget) {
  const int depth = std::min(g.order(), 6);
  std::vector<std::vector<int>> prefixes;
  {
    ExactSearch seed(g, k, d, budget);
    seed.prefixes(0, -1, depth, prefixes);
  }
  const std::size_t none = prefixes.size();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{none};
  std::mutex guard;
  std::vector<std::optional<std::vector<int>>> solutions(prefixes.size());
  std::vector<char> exhausted(prefixes.size(), 0);

  const auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= prefixes.size() || i > best.load()) return;
      ExactSearch search(g, k, d, budget);
      int top = -1;
      for (int v = 0; v < depth; ++v) {
        search.assign(v, prefixes[i][v]);
        top = std::max(top, prefixes[i][v]);
      }
      try {
        if (search.solve(depth, top)) {
          std::lock_guard lock(guard);
          solutions[i] = search.colors();
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      } catch (const BudgetExceeded&) {
        std::lock_guard lock(guard);
        exhausted[i] = 1;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  // The answer is the first prefix that succeeded, provided every earlier
  // prefix was fully refuted.
  const std::size_t limit = std::min(best.load(), prefixes.size());
  for (std::size_t i = 0; i < limit; ++i) {
    if (exhausted[i]) throw BudgetExceeded("brute_solve: node budget exhausted");
  }
  if (best.load() != none) return solutions[best.load()];
  return std::nullopt;
}

struct Part {
  std::vector<Vertex> members;
  Graph graph;
};

std::vector<Part> split_components(const Graph& g) {
  std::vector<Part> parts;
  for (auto& members : connected_components(g).members()) {
    Graph h = induced_subgraph(g, members);
    parts.push_back({std::move(members), std::move(h)});
  }
  return parts;
}

class PartitionEnumerator {
 public:
  PartitionEnumerator(const Graph& g, int d, std::size_t limit,
                      SharedBudget& budget)
      : g_(g),
        d_(d),
        limit_(limit),
        budget_(budget),
        assigned_(g.order(), 0),
        in_part_(g.order(), 0),
        excluded_(g.order(), 0),
        finalized_(g.order(), 0),
        inner_degree_(g.order(), 0) {}

  std::vector<RegularPartition> run() {
    if (limit_ > 0) next_part();
    return std::move(found_);
  }

 private:
  bool done() const { return found_.size() >= limit_; }

  void next_part() {
    Vertex v = 0;
    while (v < g_.order() && assigned_[v]) ++v;
    if (v == g_.order()) {
      found_.push_back({chosen_, d_});
      return;
    }
    add(v);
    grow();
    remove(v);
  }

  void add(Vertex v) {
    in_part_[v] = 1;
    part_.push_back(v);
    for (Vertex w : g_.neighbors(v)) {
      if (in_part_[w]) {
        ++inner_degree_[w];
        ++inner_degree_[v];
      }
    }
  }

  void remove(Vertex v) {
    for (Vertex w : g_.neighbors(v)) {
      if (in_part_[w] && w != v) {
        --inner_degree_[w];
        --inner_degree_[v];
      }
    }
    in_part_[v] = 0;
    part_.pop_back();
  }

  void grow() {
    if (done()) return;
    budget_.tick("enumerate_regular_partitions");
    Vertex pivot = -1;
    for (Vertex s : part_) {
      if (!finalized_[s] && (pivot == -1 || s < pivot)) pivot = s;
    }
    if (pivot == -1) {
      commit();
      return;
    }
    const int need = d_ - inner_degree_[pivot];
    if (need < 0) return;
    std::vector<Vertex> candidates;
    for (Vertex w : g_.neighbors(pivot)) {
      if (!assigned_[w] && !in_part_[w] && !excluded_[w]) candidates.push_back(w);
    }
    if (static_cast<int>(candidates.size()) < need) return;

    // Every size-`need` subset of the candidates, in lexicographic order.
    std::vector<int> pick(need);
    for (int i = 0; i < need; ++i) pick[i] = i;
    const int total = static_cast<int>(candidates.size());
    while (true) {
      try_subset(pivot, candidates, pick);
      if (done()) return;
      int i = need - 1;
      while (i >= 0 && pick[i] == total - need + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  void try_subset(Vertex pivot, const std::vector<Vertex>& candidates,
                  const std::vector<int>& pick) {
    std::vector<char> taken(candidates.size(), 0);
    for (int i : pick) taken[i] = 1;
    std::vector<Vertex> newly_excluded;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!taken[i]) {
        excluded_[candidates[i]] = 1;
        newly_excluded.push_back(candidates[i]);
      }
    }
    for (int i : pick) add(candidates[i]);
    finalized_[pivot] = 1;

    bool ok = true;
    for (Vertex s : part_) {
      if (inner_degree_[s] > d_) ok = false;
    }
    if (ok) grow();

    finalized_[pivot] = 0;
    for (auto it = pick.rbegin(); it != pick.rend(); ++it) remove(candidates[*it]);
    for (Vertex w : newly_excluded) excluded_[w] = 0;
  }

  void commit() {
    std::vector<Vertex> members = part_;
    std::sort(members.begin(), members.end());
    // Classes grow again from scratch, so the per-class flags are parked.
    const auto saved_part = part_;
    const auto saved_finalized = finalized_;
    const auto saved_excluded = excluded_;
    for (Vertex v : members) {
      assigned_[v] = 1;
      in_part_[v] = 0;
      inner_degree_[v] = 0;
    }
    std::fill(excluded_.begin(), excluded_.end(), 0);
    std::fill(finalized_.begin(), finalized_.end(), 0);
    part_.clear();
    chosen_.push_back(members);

    next_part();

    chosen_.pop_back();
    part_ = saved_part;
    finalized_ = saved_finalized;
    excluded_ = saved_excluded;
    for (Vertex v : members) {
      assigned_[v] = 0;
      in_part_[v] = 1;
    }
    for (Vertex v : members) {
      for (Vertex w : g_.neighbors(v)) {
        if (in_part_[w]) ++inner_degree_[v];
      }
    }
  }

  const Graph& g_;
  int d_;
  std::size_t limit_;
  SharedBudget& budget_;
  std::vector<char> assigned_;
  std::vector<char> in_part_;
  std::vector<char> excluded_;
  std::vector<char> finalized_;
  std::vector<int> inner_degree_;
  std::vector<Vertex> part_;
  Partition chosen_;
  std::vector<RegularPartition> found_;
};

}  // namespace

DecisionResult brute_solve(const Graph& g, int k, int d,
                           const OracleOptions& options) {
  if (k < 0 || d < 0) throw Error(ErrorKind::kBadParameter, "k and d must be >= 0");
  SharedBudget budget(options.budget);
  DecisionResult result{true, Coloring{k, std::vector<int>(g.order(), 0)}};
  if (g.order() == 0) return result;
  if (k == 0 || !feasibility_precheck(g, d)) return {false, {}};
  for (const Part& part : split_components(g)) {
    const auto colors = options.threads > 1
                            ? solve_parallel(part.graph, k, d, options.threads, budget)
                            : solve_sequential(part.graph, k, d, budget);
    if (!colors) return {false, {}};
    for (std::size_t i = 0; i < part.members.size(); ++i) {
      result.witness.assign[part.members[i]] = (*colors)[i];
    }
  }
  return result;
}

SolveOutcome brute_chi(const Graph& g, int d, int k_max,
                       const OracleOptions& options) {
  if (d < 0) throw Error(ErrorKind::kBadParameter, "d must be >= 0");
  if (g.order() == 0) return SolveOutcome::finite(1, Coloring{1, {}});
  if (!feasibility_precheck(g, d)) return SolveOutcome::infeasible();

  int chi = 0;
  std::vector<int> assign(g.order(), 0);
  for (const Part& part : split_components(g)) {
    const int useful = part.graph.order() / (d + 1);
    const int ceiling = k_max > 0 ? std::min(k_max, useful) : useful;
    std::optional<DecisionResult> hit;
    for (int k = 1; k <= ceiling; ++k) {
      DecisionResult r = brute_solve(part.graph, k, d, options);
      if (r.yes) {
        hit = std::move(r);
        chi = std::max(chi, k);
        break;
      }
    }
    if (!hit) {
      if (ceiling == useful) return SolveOutcome::infeasible();
      if (!brute_solve(part.graph, useful, d, options).yes) {
        return SolveOutcome::infeasible();
      }
      throw BudgetExceeded("brute_chi: chromatic value exceeds k_max = " +
                           std::to_string(k_max));
    }
    for (std::size_t i = 0; i < part.members.size(); ++i) {
      assign[part.members[i]] = hit->witness.assign[i];
    }
  }
  return SolveOutcome::finite(chi, Coloring{chi, std::move(assign)});
}

std::vector<RegularPartition> enumerate_regular_partitions(
    const Graph& g, int d, std::size_t limit, std::uint64_t budget) {
  if (d < 0) throw Error(ErrorKind::kBadParameter, "d must be >= 0");
  SharedBudget shared(budget);
  return PartitionEnumerator(g, d, limit, shared).run();
}

SolveOutcome chi_via_quotients(const Graph& g, int d, std::uint64_t budget) {
  if (g.order() == 0) return SolveOutcome::finite(1, Coloring{1, {}});
  const auto partitions = enumerate_regular_partitions(
      g, d, std::numeric_limits<std::size_t>::max(), budget);
  if (partitions.empty()) return SolveOutcome::infeasible();
  std::optional<ChromaticResult> best;
  const RegularPartition* best_partition = nullptr;
  for (const RegularPartition& h : partitions) {
    ChromaticResult r = chromatic_number(contract_partition(g, h.parts), budget);
    if (!best || r.chi < best->chi) {
      best = std::move(r);
      best_partition = &h;
      if (best->chi == 1) break;
    }
  }
  return SolveOutcome::finite(
      best->chi, lift_quotient_coloring(best_partition->parts, best->witness,
                                        g.order()));
}

}  // namespace exactcol

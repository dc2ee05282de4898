#include "exactcol/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "exactcol/error.hpp"

namespace exactcol {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kSelfLoop: return "SelfLoop";
    case ErrorKind::kBadParameter: return "BadParameter";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kInconsistentHeader: return "InconsistentHeader";
    case ErrorKind::kNotAPartition: return "NotAPartition";
    case ErrorKind::kDisconnectedClass: return "DisconnectedClass";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kNotATree: return "NotATree";
    case ErrorKind::kNotACactus: return "NotACactus";
    case ErrorKind::kNotABlockGraph: return "NotABlockGraph";
    case ErrorKind::kIncompleteLabeling: return "IncompleteLabeling";
    case ErrorKind::kNotFourRegular: return "NotFourRegular";
    case ErrorKind::kMalformedFormula: return "MalformedFormula";
    case ErrorKind::kLiftContractViolated: return "LiftContractViolated";
  }
  return "Unknown";
}

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(ErrorKind::kBadParameter, "negative vertex count");
  adj_.resize(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorKind::kOutOfRange,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                      ") outside [0, " + std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::kSelfLoop,
                  "self-loop at vertex " + std::to_string(e.u));
    }
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  std::size_t half_edges = 0;
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    list.shrink_to_fit();
    half_edges += list.size();
  }
  num_edges_ = half_edges / 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::min_degree() const noexcept {
  if (adj_.empty()) return 0;
  std::size_t best = adj_.front().size();
  for (const auto& list : adj_) best = std::min(best, list.size());
  return static_cast<int>(best);
}

int Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adj_) best = std::max(best, list.size());
  return static_cast<int>(best);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

std::vector<std::vector<Vertex>> Components::members() const {
  std::vector<std::vector<Vertex>> out(count);
  for (Vertex v = 0; v < static_cast<Vertex>(id.size()); ++v) {
    out[id[v]].push_back(v);
  }
  return out;
}

Components connected_components(const Graph& g) {
  Components comps;
  comps.id.assign(g.order(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comps.id[s] != -1) continue;
    const int label = comps.count++;
    comps.id[s] = label;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (comps.id[w] == -1) {
          comps.id[w] = label;
          stack.push_back(w);
        }
      }
    }
  }
  return comps;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    local[vertices[i]] = i;
  }
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      const int j = local[w];
      if (j > i) edges.push_back({i, j});
    }
  }
  return Graph(static_cast<int>(vertices.size()), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.order();
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph(a.order() + b.order(), edges);
}

bool is_bipartite(const Graph& g) {
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
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace exactcol

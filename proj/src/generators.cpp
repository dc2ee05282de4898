#include "exactcol/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

#include "exactcol/error.hpp"

namespace exactcol {
namespace {

void require(bool ok, const char* family, int n, int minimum) {
  if (!ok) {
    throw Error(ErrorKind::kBadParameter,
                std::string(family) + " needs n >= " + std::to_string(minimum) +
                    ", got " + std::to_string(n));
  }
}

constexpr std::array<std::pair<Family, std::string_view>, 9> kFamilyNames = {{
    {Family::kCycle, "cycle"},
    {Family::kPath, "path"},
    {Family::kComplete, "complete"},
    {Family::kWheel, "wheel"},
    {Family::kStar, "star"},
    {Family::kPetersen, "petersen"},
    {Family::kCartesianK2Complete, "cartesian-k2-complete"},
    {Family::kCategoricalK2Complete, "categorical-k2-complete"},
    {Family::kTightnessGadget, "tightness-gadget"},
}};

}  // namespace

Graph cycle_graph(int n) {
  require(n >= 3, "cycle", n, 3);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

Graph path_graph(int n) {
  require(n >= 1, "path", n, 1);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete", n, 1);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, edges);
}

Graph wheel_graph(int n) {
  require(n >= 4, "wheel", n, 4);
  std::vector<Edge> edges;
  const int rim = n - 1;
  for (int i = 0; i < rim; ++i) {
    edges.push_back({0, 1 + i});
    edges.push_back({1 + i, 1 + (i + 1) % rim});
  }
  return Graph(n, edges);
}

Graph star_graph(int n) {
  require(n >= 1, "star", n, 1);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i});
  return Graph(n, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, edges);
}

Graph cartesian_k2_complete(int m) {
  require(m >= 1, "cartesian-k2-complete", m, 1);
  std::vector<Edge> edges;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int l = j + 1; l < m; ++l) edges.push_back({i * m + j, i * m + l});
    }
  }
  for (int j = 0; j < m; ++j) edges.push_back({j, m + j});
  return Graph(2 * m, edges);
}

Graph categorical_k2_complete(int m) {
  require(m >= 2, "categorical-k2-complete", m, 2);
  std::vector<Edge> edges;
  for (int j = 0; j < m; ++j) {
    for (int l = 0; l < m; ++l) {
      if (j != l) edges.push_back({j, m + l});
    }
  }
  return Graph(2 * m, edges);
}

Graph tightness_gadget() {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 2},
                                   {0, 3}, {1, 4}, {2, 5}};
  return Graph(6, edges);
}

Graph bowtie_graph() {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 2},
                                   {2, 3}, {3, 4}, {2, 4}};
  return Graph(5, edges);
}

Graph fan_graph(int path_order) {
  require(path_order >= 1, "fan", path_order, 1);
  std::vector<Edge> edges;
  for (int i = 0; i < path_order; ++i) {
    edges.push_back({i, path_order});
    if (i + 1 < path_order) edges.push_back({i, i + 1});
  }
  return Graph(path_order + 1, edges);
}

Graph octahedron_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (j != (i ^ 1)) edges.push_back({i, j});
    }
  }
  return Graph(6, edges);
}

Graph icosahedron_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    const int upper = 1 + i;
    const int upper_next = 1 + (i + 1) % 5;
    const int lower = 6 + i;
    const int lower_next = 6 + (i + 1) % 5;
    edges.push_back({0, upper});
    edges.push_back({upper, upper_next});
    edges.push_back({11, lower});
    edges.push_back({lower, lower_next});
    edges.push_back({upper, lower});
    edges.push_back({upper_next, lower});
  }
  return Graph(12, edges);
}

Graph gen_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kCycle: return cycle_graph(spec.n);
    case Family::kPath: return path_graph(spec.n);
    case Family::kComplete: return complete_graph(spec.n);
    case Family::kWheel: return wheel_graph(spec.n);
    case Family::kStar: return star_graph(spec.n);
    case Family::kPetersen: return petersen_graph();
    case Family::kCartesianK2Complete: return cartesian_k2_complete(spec.n);
    case Family::kCategoricalK2Complete: return categorical_k2_complete(spec.n);
    case Family::kTightnessGadget: return tightness_gadget();
  }
  throw Error(ErrorKind::kBadParameter, "unknown family");
}

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [family, label] : kFamilyNames) {
    if (label == name) return family;
  }
  return std::nullopt;
}

std::string_view family_name(Family family) {
  for (const auto& [f, label] : kFamilyNames) {
    if (f == family) return label;
  }
  return "unknown";
}

Graph random_cactus(int n, std::uint64_t seed, double edge_probability,
                    int max_cycle) {
  require(n >= 1, "random-cactus", n, 1);
  if (max_cycle < 3) {
    throw Error(ErrorKind::kBadParameter, "max_cycle must be at least 3");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution pick_edge(edge_probability);
  std::vector<Edge> edges;
  int count = 1;
  while (count < n) {
    const int anchor = std::uniform_int_distribution<int>(0, count - 1)(rng);
    const int remaining = n - count;
    if (remaining == 1 || pick_edge(rng)) {
      edges.push_back({anchor, count});
      ++count;
      continue;
    }
    const int longest = std::min(max_cycle, remaining + 1);
    const int length = std::uniform_int_distribution<int>(3, longest)(rng);
    int prev = anchor;
    for (int i = 1; i < length; ++i) {
      edges.push_back({prev, count});
      prev = count++;
    }
    edges.push_back({prev, anchor});
  }
  return Graph(n, edges);
}

Graph planted_cactus(int n, std::uint64_t seed, int colors, double bridge_probability,
                     int max_cycle) {
  require(n >= 1, "planted-cactus", n, 1);
  if (colors < 2) throw Error(ErrorKind::kBadParameter, "colors must be at least 2");
  if (max_cycle < 4) throw Error(ErrorKind::kBadParameter, "max_cycle must be at least 4");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution pick_bridge(bridge_probability);
  const auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  std::vector<Edge> edges;
  std::vector<int> color;

  // Every vertex gets exactly one monochromatic cycle, created with it.
  const auto m_cycle_at = [&](int v) {
    const int length = uniform(3, max_cycle);
    int prev = v;
    for (int i = 1; i < length; ++i) {
      const int w = static_cast<int>(color.size());
      color.push_back(color[v]);
      edges.push_back({prev, w});
      prev = w;
    }
    edges.push_back({prev, v});
  };
  const auto other_color = [&](int c) { return (c + uniform(1, colors - 1)) % colors; };

  color.push_back(0);
  m_cycle_at(0);
  while (static_cast<int>(color.size()) < n) {
    const int u = uniform(0, static_cast<int>(color.size()) - 1);
    if (pick_bridge(rng)) {
      const int w = static_cast<int>(color.size());
      color.push_back(other_color(color[u]));
      edges.push_back({u, w});
      m_cycle_at(w);
      continue;
    }
    // Properly colored cycle through u; even when only two colors exist.
    int length = uniform(colors == 2 ? 4 : 3, max_cycle);
    if (colors == 2 && length % 2 != 0) --length;
    std::vector<int> fresh;
    int prev = u;
    for (int i = 1; i < length; ++i) {
      const int w = static_cast<int>(color.size());
      int c = other_color(color[prev]);
      if (i == length - 1) {
        while (c == color[prev] || c == color[u]) c = (c + 1) % colors;
      }
      color.push_back(c);
      edges.push_back({prev, w});
      fresh.push_back(w);
      prev = w;
    }
    edges.push_back({prev, u});
    for (int w : fresh) m_cycle_at(w);
  }
  return Graph(static_cast<int>(color.size()), edges);
}

Graph random_block_graph(int n, std::uint64_t seed, int max_block) {
  require(n >= 1, "random-block-graph", n, 1);
  if (max_block < 2) {
    throw Error(ErrorKind::kBadParameter, "max_block must be at least 2");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  int count = 1;
  while (count < n) {
    const int anchor = std::uniform_int_distribution<int>(0, count - 1)(rng);
    const int largest = std::min(max_block, n - count + 1);
    const int size = std::uniform_int_distribution<int>(2, largest)(rng);
    std::vector<int> block = {anchor};
    for (int i = 1; i < size; ++i) block.push_back(count++);
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        edges.push_back({block[i], block[j]});
      }
    }
  }
  return Graph(n, edges);
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

}  // namespace exactcol

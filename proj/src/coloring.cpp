#include "exactcol/coloring.hpp"

#include <charconv>
#include <sstream>

#include "exactcol/error.hpp"
#include "exactcol/io.hpp"

namespace exactcol {

DefectVector defects(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.assign.size()) != g.order()) {
    throw Error(ErrorKind::kLengthMismatch,
                "coloring has " + std::to_string(c.assign.size()) +
                    " entries for " + std::to_string(g.order()) + " vertices");
  }
  DefectVector out(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (c.assign[w] == c.assign[v]) ++out[v];
    }
  }
  return out;
}

bool is_exact_coloring(const Graph& g, const Coloring& c, int d) {
  if (static_cast<int>(c.assign.size()) != g.order()) return false;
  for (int color : c.assign) {
    if (color < 0 || color >= c.k) return false;
  }
  for (int defect : defects(g, c)) {
    if (defect != d) return false;
  }
  return true;
}

bool feasibility_precheck(const Graph& g, int d) {
  if (d < 0) return false;
  if (g.order() > 0 && d > g.min_degree()) return false;
  const Components comps = connected_components(g);
  std::vector<int> sizes(comps.count, 0);
  for (int id : comps.id) ++sizes[id];
  for (int size : sizes) {
    if (size < d + 1) return false;
  }
  return true;
}

std::string describe(const SolveOutcome& outcome) {
  return outcome.is_finite() ? std::to_string(outcome.chi()) : "inf";
}

Coloring read_coloring(std::string_view text) {
  Coloring c;
  bool have_k = false;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
      line.remove_prefix(1);
    }
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    if (line.empty()) continue;
    int value = 0;
    const auto* end = line.data() + line.size();
    const auto [ptr, ec] = std::from_chars(line.data(), end, value);
    if (ec != std::errc() || ptr != end || value < 0) {
      throw ParseError(ErrorKind::kParseError, i + 1,
                       "expected a nonnegative integer");
    }
    if (!have_k) {
      c.k = value;
      have_k = true;
      continue;
    }
    if (value >= c.k) {
      throw ParseError(ErrorKind::kParseError, i + 1,
                       "color " + std::to_string(value) + " not below k");
    }
    c.assign.push_back(value);
  }
  if (!have_k) throw ParseError(ErrorKind::kParseError, 1, "missing k");
  return c;
}

std::string write_coloring(const Coloring& c) {
  std::ostringstream out;
  out << c.k << '\n';
  for (int color : c.assign) out << color << '\n';
  return out.str();
}

Coloring compact(const Coloring& c) {
  std::vector<int> relabel(c.k, -1);
  Coloring out;
  out.assign.reserve(c.assign.size());
  for (int color : c.assign) {
    if (relabel[color] == -1) relabel[color] = out.k++;
    out.assign.push_back(relabel[color]);
  }
  return out;
}

}  // namespace exactcol

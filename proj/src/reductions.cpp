#include "exactcol/reductions.hpp"

#include <charconv>
#include <sstream>

#include "exactcol/error.hpp"
#include "exactcol/generators.hpp"
#include "exactcol/io.hpp"
#include "json.hpp"

namespace exactcol {
namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_int(std::string_view s) {
  long long value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return value;
}

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw ParseError(ErrorKind::kMalformedFormula, line, what);
}

[[noreturn]] void violated(const std::string& what) {
  throw Error(ErrorKind::kLiftContractViolated, what);
}

// Attaches one copy of `gadget` per vertex of g, gadget vertex 0 identified
// with the host vertex; the other gadget vertices of copy v are numbered
// n + v*(h-1) + (t-1).
Reduction attach_gadgets(const Graph& g, const Graph& gadget,
                         const std::string& name) {
  const int n = g.order();
  const int extra = gadget.order() - 1;
  std::vector<Edge> edges = g.edges();
  Reduction out;
  out.map.vertices.resize(static_cast<std::size_t>(n) * (extra + 1));
  for (Vertex v = 0; v < n; ++v) out.map.vertices[v] = {"original", v, 0};
  for (Vertex v = 0; v < n; ++v) {
    const auto id = [&](Vertex t) { return t == 0 ? v : n + v * extra + (t - 1); };
    for (Vertex t = 1; t <= extra; ++t) out.map.vertices[id(t)] = {name, v, t};
    for (const Edge& e : gadget.edges()) edges.push_back({id(e.u), id(e.v)});
  }
  out.graph = Graph(n * (extra + 1), edges);
  out.map.source = g;
  return out;
}

Coloring restrict_to(const Coloring& c, int n) {
  return Coloring{c.k, std::vector<int>(c.assign.begin(), c.assign.begin() + n)};
}

}  // namespace

NaeFormula read_nae_formula(std::string_view text, bool strict) {
  NaeFormula f;
  bool have_header = false;
  long long declared = 0;
  std::vector<int> pending;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    const auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_header) malformed(line_no, "duplicate header");
      if (tok.size() != 4 || tok[1] != "nae") malformed(line_no, "expected 'p nae V C'");
      const auto v = to_int(tok[2]);
      const auto c = to_int(tok[3]);
      if (!v || !c || *v < 0 || *c < 0 || *v > 1'000'000'000) {
        malformed(line_no, "bad header counts");
      }
      f.num_vars = static_cast<int>(*v);
      declared = *c;
      have_header = true;
      continue;
    }
    if (!have_header) malformed(line_no, "clause before header");
    for (std::string_view t : tok) {
      const auto lit = to_int(t);
      if (!lit) malformed(line_no, "not an integer: " + std::string(t));
      if (*lit == 0) {
        if (pending.size() != 3) malformed(line_no, "clause must have exactly 3 literals");
        if (strict && (pending[0] == pending[1] || pending[0] == pending[2] ||
                       pending[1] == pending[2])) {
          malformed(line_no, "clause repeats a variable");
        }
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      if (*lit < 0) malformed(line_no, "negative literal");
      if (*lit > f.num_vars) malformed(line_no, "variable exceeds header count");
      pending.push_back(static_cast<int>(*lit - 1));
    }
  }
  if (!have_header) malformed(line_no, "missing header");
  if (!pending.empty()) malformed(line_no, "unterminated clause");
  if (static_cast<long long>(f.clauses.size()) != declared) {
    malformed(line_no, "header declares " + std::to_string(declared) +
                           " clauses, found " + std::to_string(f.clauses.size()));
  }
  return f;
}

std::string write_nae_formula(const NaeFormula& f) {
  std::ostringstream out;
  out << "p nae " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    out << c[0] + 1 << ' ' << c[1] + 1 << ' ' << c[2] + 1 << " 0\n";
  }
  return out.str();
}

bool nae_satisfied(const NaeFormula& f, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != f.num_vars) return false;
  for (const auto& c : f.clauses) {
    const int trues = assignment[c[0]] + assignment[c[1]] + assignment[c[2]];
    if (trues == 0 || trues == 3) return false;
  }
  return true;
}

std::optional<std::vector<bool>> nae_solve_brute(const NaeFormula& f) {
  if (f.num_vars > 24) throw Error(ErrorKind::kBadParameter, "too many variables");
  std::vector<bool> a(f.num_vars);
  for (std::uint32_t mask = 0; mask < (1u << f.num_vars); ++mask) {
    for (int i = 0; i < f.num_vars; ++i) a[i] = (mask >> i) & 1u;
    if (nae_satisfied(f, a)) return a;
  }
  return std::nullopt;
}

std::string_view to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::kColoringToExact: return "coloring-to-exact";
    case ReductionKind::kPlanarVariant: return "planar-variant";
    case ReductionKind::kIncrementDefect: return "increment-defect";
    case ReductionKind::kNae3Sat: return "nae3sat";
  }
  return "unknown";
}

std::string ReductionMap::to_json() const {
  nlohmann::json j;
  j["reduction"] = std::string(to_string(kind));
  j["target_k"] = target_k;
  j["target_d"] = target_d;
  if (formula) {
    j["variable_cycle"] = variable_cycle;
    j["source"] = {{"num_vars", formula->num_vars},
                   {"clauses", formula->clauses}};
  } else {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : source.edges()) edges.push_back({e.u, e.v});
    j["source"] = {{"order", source.order()}, {"edges", edges}};
  }
  nlohmann::json vs = nlohmann::json::array();
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    vs.push_back({{"vertex", v},
                  {"gadget", vertices[v].gadget},
                  {"copy", vertices[v].copy},
                  {"role", vertices[v].role}});
  }
  j["vertices"] = vs;
  return j.dump(2);
}

Reduction reduce_coloring_to_exact(const Graph& g, int k, int d) {
  if (k < 3) throw Error(ErrorKind::kBadParameter, "k must be >= 3");
  if (d < 1) throw Error(ErrorKind::kBadParameter, "d must be >= 1");
  Reduction r = attach_gadgets(g, complete_graph(d + 1), "attach");
  r.map.kind = ReductionKind::kColoringToExact;
  r.map.target_k = k;
  r.map.target_d = d;
  return r;
}

Graph planar_regular_gadget(int d) {
  switch (d) {
    case 1: return complete_graph(2);
    case 2: return complete_graph(3);
    case 3: return complete_graph(4);
    case 4: return octahedron_graph();
    case 5: return icosahedron_graph();
    default:
      throw Error(ErrorKind::kBadParameter, "planar gadget needs 1 <= d <= 5");
  }
}

Reduction reduce_planar_variant(const Graph& g, int d) {
  const Graph gadget = planar_regular_gadget(d);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 4) {
      throw Error(ErrorKind::kNotFourRegular,
                  "vertex " + std::to_string(v) + " has degree " +
                      std::to_string(g.degree(v)));
    }
  }
  Reduction r = attach_gadgets(g, gadget, "attach");
  r.map.kind = ReductionKind::kPlanarVariant;
  r.map.target_d = d;
  return r;
}

Reduction reduce_increment_defect(const Graph& g, int d) {
  if (d < 1) throw Error(ErrorKind::kBadParameter, "d must be >= 1");
  const int n = g.order();
  const int h = d + 3;
  std::vector<Edge> edges = g.edges();
  Reduction r;
  r.map.vertices.resize(static_cast<std::size_t>(n) * (h + 1));
  for (Vertex v = 0; v < n; ++v) r.map.vertices[v] = {"original", v, 0};
  for (Vertex v = 0; v < n; ++v) {
    const Vertex base = n + v * h;
    for (int a = 0; a < h; ++a) {
      r.map.vertices[base + a] = {"increment", v, a};
      for (int b = a + 1; b < h; ++b) {
        if (a == 0 && b == 1) continue;
        edges.push_back({base + a, base + b});
      }
    }
    edges.push_back({v, base});
    edges.push_back({v, base + 1});
  }
  r.graph = Graph(n * (h + 1), edges);
  r.map.kind = ReductionKind::kIncrementDefect;
  r.map.source = g;
  r.map.target_k = 2;
  r.map.target_d = d + 2;
  return r;
}

Reduction reduce_nae3sat(const NaeFormula& f, bool use_triangles) {
  for (const auto& c : f.clauses) {
    for (int x : c) {
      if (x < 0 || x >= f.num_vars) {
        throw Error(ErrorKind::kMalformedFormula, "variable index out of range");
      }
    }
  }
  const int clauses = static_cast<int>(f.clauses.size());
  const int s = use_triangles ? 3 : 4;
  const int n = 6 * clauses + s * f.num_vars;
  const auto labeled = [&](int var) { return 6 * clauses + s * var; };
  Reduction r;
  r.map.vertices.resize(n);
  std::vector<Edge> edges;
  for (int j = 0; j < clauses; ++j) {
    const int b = 6 * j;
    for (int t = 0; t < 6; ++t) r.map.vertices[b + t] = {"clause", j, t};
    edges.push_back({b, b + 1});
    edges.push_back({b, b + 2});
    edges.push_back({b + 1, b + 2});
    edges.push_back({b + 4, b + 5});
    for (int t = 0; t < 3; ++t) {
      for (int o = 3; o < 6; ++o) edges.push_back({b + t, b + o});
      edges.push_back({b + t, labeled(f.clauses[j][t])});
    }
  }
  for (int i = 0; i < f.num_vars; ++i) {
    const int b = labeled(i);
    for (int t = 0; t < s; ++t) {
      r.map.vertices[b + t] = {"variable", i, t};
      edges.push_back({b + t, b + (t + 1) % s});
    }
  }
  r.graph = Graph(n, edges);
  r.map.kind = ReductionKind::kNae3Sat;
  r.map.target_k = 2;
  r.map.target_d = 2;
  r.map.formula = f;
  r.map.variable_cycle = s;
  return r;
}

SourceSolution lift_solution(const ReductionMap& map, const Coloring& target) {
  const int n = static_cast<int>(map.vertices.size());
  if (static_cast<int>(target.assign.size()) != n) {
    throw Error(ErrorKind::kBadParameter, "coloring does not match the target graph");
  }
  if (map.target_k > 0 && target.k > map.target_k) {
    throw Error(ErrorKind::kBadParameter, "coloring uses too many colors");
  }
  // Rebuilding the target is cheap at the sizes lifting is used for.
  Graph rebuilt;
  switch (map.kind) {
    case ReductionKind::kColoringToExact:
      rebuilt = reduce_coloring_to_exact(map.source, std::max(3, map.target_k),
                                         map.target_d).graph;
      break;
    case ReductionKind::kPlanarVariant:
      rebuilt = reduce_planar_variant(map.source, map.target_d).graph;
      break;
    case ReductionKind::kIncrementDefect:
      rebuilt = reduce_increment_defect(map.source, map.target_d - 2).graph;
      break;
    case ReductionKind::kNae3Sat:
      rebuilt = reduce_nae3sat(*map.formula, map.variable_cycle == 3).graph;
      break;
  }
  if (!is_exact_coloring(rebuilt, target, map.target_d)) {
    throw Error(ErrorKind::kBadParameter, "target coloring is not exact");
  }

  switch (map.kind) {
    case ReductionKind::kColoringToExact:
    case ReductionKind::kPlanarVariant: {
      Coloring c = restrict_to(target, map.source.order());
      if (!is_proper(map.source, c)) violated("restriction is not a proper coloring");
      return c;
    }
    case ReductionKind::kIncrementDefect: {
      Coloring c = restrict_to(target, map.source.order());
      if (!is_exact_coloring(map.source, c, map.target_d - 2)) {
        violated("restriction is not an exact (2, d)-coloring");
      }
      return c;
    }
    case ReductionKind::kNae3Sat: {
      const NaeFormula& f = *map.formula;
      std::vector<bool> assignment(f.num_vars);
      for (int v = 0; v < n; ++v) {
        const Provenance& p = map.vertices[v];
        if (p.gadget == "variable" && p.role == 0) assignment[p.copy] = target.assign[v] == 1;
      }
      if (!nae_satisfied(f, assignment)) violated("read-off assignment is not NAE-satisfying");
      return assignment;
    }
  }
  violated("unknown reduction");
}

}  // namespace exactcol

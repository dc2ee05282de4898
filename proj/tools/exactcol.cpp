// exactcol: command-line front end for exact defective coloring.
//
// Exit codes: 0 answered / valid, 1 usage or parse error, 2 unknown (budget),
// 3 invalid coloring or failed reduction check.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "exactcol/block_graph.hpp"
#include "exactcol/cactus.hpp"
#include "exactcol/chromatic.hpp"
#include "exactcol/closed_form.hpp"
#include "exactcol/coloring.hpp"
#include "exactcol/error.hpp"
#include "exactcol/generators.hpp"
#include "exactcol/io.hpp"
#include "exactcol/oracle.hpp"
#include "exactcol/reductions.hpp"
#include "exactcol/structure.hpp"

namespace {

using namespace exactcol;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInvalid = 3;

GraphFormat parse_format(const std::string& name) {
  const auto f = graph_format_from_name(name);
  if (!f) throw Error(ErrorKind::kBadParameter, "unknown format: " + name);
  return *f;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kBadParameter, "cannot write " + path);
  out << text;
}

// ---- solve ---------------------------------------------------------------

struct SolveArgs {
  std::string input;
  std::string format = "edgelist";
  int d = -1;
  std::optional<int> k;
  bool chi = false;
  std::string algorithm = "auto";
  std::uint64_t budget = kDefaultNodeBudget;
  int threads = 1;
};

struct Answer {
  std::string algorithm;
  std::optional<SolveOutcome> outcome;  // chi mode, or decision via chi
  std::optional<DecisionResult> decision;
  std::string reason;
  bool unknown = false;
};

std::optional<SolveOutcome> closed_form_chi(const Graph& g, int d) {
  const ClassFlags flags = recognize(g);
  if (flags.is_tree && g.order() > 0) return chi_tree(g, d);
  if (auto trivial = chi_regular_trivial(g, d)) return trivial;
  if (const auto match = match_family(g)) {
    switch (match->spec.family) {
      case Family::kComplete:
        return relabel_outcome(chi_complete(match->spec.n, d), *match);
      case Family::kCycle:
        if (d >= 1) return relabel_outcome(chi_cycle(match->spec.n, d), *match);
        break;
      case Family::kWheel:
        if (d == 1) return relabel_outcome(chi_wheel(match->spec.n, d), *match);
        break;
      default:
        break;
    }
  }
  return std::nullopt;
}

std::string precheck_reason(const Graph& g, int d) {
  if (d > g.min_degree()) return "d exceeds min degree";
  return "component smaller than d + 1";
}

Answer solve(const Graph& g, const SolveArgs& a) {
  Answer ans;
  const OracleOptions opts{a.budget, a.threads};
  std::string algo = a.algorithm;

  if (!feasibility_precheck(g, a.d)) {
    ans.algorithm = algo == "auto" ? "precheck" : algo;
    ans.outcome = SolveOutcome::infeasible();
    ans.reason = precheck_reason(g, a.d);
    return ans;
  }

  if (algo == "auto") {
    const ClassFlags flags = recognize(g);
    if (auto cf = closed_form_chi(g, a.d)) {
      ans.algorithm = "closedform";
      ans.outcome = std::move(cf);
      return ans;
    }
    if (flags.is_cactus && a.d == 2) {
      algo = "cactus";
    } else if (flags.is_block_graph) {
      algo = "blockgraph";
    } else {
      algo = "brute";
    }
  }
  ans.algorithm = algo;

  if (algo == "closedform") {
    ans.outcome = closed_form_chi(g, a.d);
    if (!ans.outcome) {
      throw Error(ErrorKind::kBadParameter, "no closed form applies to this graph");
    }
  } else if (algo == "cactus") {
    if (a.d == 2) {
      ans.outcome = cactus_chi2(g);
      if (!ans.outcome->is_finite()) {
        ans.reason = std::string(
            to_string(cactus_label(cactus_preprocess(g), ColorRange::kMany).reason));
      }
    } else if (a.d == 1) {
      const CactusChi1Result r = cactus_chi1(g);
      if (!r.exact) {
        ans.unknown = true;
        ans.reason = "value in [" + std::to_string(r.lower_bound) + ", " +
                     std::to_string(r.best.chi()) + "]";
        ans.outcome = r.best;
        return ans;
      }
      ans.outcome = r.best;
    } else {
      if (!recognize(g).is_cactus) {
        throw Error(ErrorKind::kNotACactus, "input is not a cactus");
      }
      ans.outcome = SolveOutcome::infeasible();
      ans.reason = "d exceeds min degree";
    }
  } else if (algo == "blockgraph") {
    ans.outcome = blockgraph_chi(g, a.d);
    if (!ans.outcome->is_finite()) ans.reason = "no K_{d+1}-factor";
  } else if (algo == "brute") {
    if (a.k && !a.chi) {
      ans.decision = brute_solve(g, *a.k, a.d, opts);
    } else {
      ans.outcome = brute_chi(g, a.d, 0, opts);
    }
  } else {
    throw Error(ErrorKind::kBadParameter, "unknown algorithm: " + algo);
  }
  return ans;
}

json witness_json(const Coloring& c) { return c.assign; }

int cmd_solve(const SolveArgs& a) {
  if (a.d < 0) throw Error(ErrorKind::kBadParameter, "--d must be >= 0");
  if (a.k.has_value() == a.chi) {
    throw Error(ErrorKind::kBadParameter, "give exactly one of --k and --chi");
  }
  if (a.k && *a.k < 1) throw Error(ErrorKind::kBadParameter, "--k must be >= 1");
  const Graph g = read_graph_file(a.input, parse_format(a.format));

  const auto start = std::chrono::steady_clock::now();
  json report;
  report["d"] = a.d;
  report["k"] = a.k ? json(*a.k) : json(nullptr);
  report["chi"] = nullptr;
  report["witness"] = nullptr;
  report["reason"] = nullptr;
  int code = kExitOk;
  try {
    Answer ans = solve(g, a);
    report["algorithm"] = ans.algorithm;
    if (!ans.reason.empty()) report["reason"] = ans.reason;
    if (ans.unknown) {
      report["verdict"] = "unknown";
      code = kExitUnknown;
    } else if (ans.decision) {
      report["verdict"] = ans.decision->yes ? "yes" : "no";
      if (ans.decision->yes) report["witness"] = witness_json(ans.decision->witness);
    } else if (!ans.outcome->is_finite()) {
      report["verdict"] = a.chi ? "infinite" : "no";
    } else {
      const SolveOutcome& o = *ans.outcome;
      report["chi"] = o.chi();
      if (a.chi) {
        report["verdict"] = "yes";
        report["witness"] = witness_json(o.witness());
      } else if (o.chi() <= *a.k) {
        report["verdict"] = "yes";
        report["witness"] = witness_json(o.witness());
      } else {
        report["verdict"] = "no";
      }
    }
  } catch (const BudgetExceeded& e) {
    report["algorithm"] = a.algorithm == "auto" ? "brute" : a.algorithm;
    report["verdict"] = "unknown";
    report["reason"] = e.what();
    code = kExitUnknown;
  }
  report["elapsed_ms"] = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  std::cout << report.dump() << '\n';
  return code;
}

// ---- verify --------------------------------------------------------------

Coloring read_coloring_any(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') return read_coloring(text);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(ErrorKind::kParseError, 1, std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("witness") || !j["witness"].is_array()) {
    throw ParseError(ErrorKind::kParseError, 1, "report has no witness");
  }
  Coloring c;
  c.assign = j["witness"].get<std::vector<int>>();
  int top = 0;
  for (int x : c.assign) top = std::max(top, x + 1);
  c.k = j.contains("k") && j["k"].is_number_integer() ? std::max(top, j["k"].get<int>())
                                                        : top;
  return c;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path,
               int d, const std::string& format) {
  const Graph g = read_graph_file(graph_path, parse_format(format));
  const Coloring c = read_coloring_any(read_text_file(coloring_path));
  if (static_cast<int>(c.assign.size()) != g.order()) {
    std::cout << "invalid: coloring has " << c.assign.size() << " entries, graph has "
              << g.order() << " vertices\n";
    return kExitInvalid;
  }
  bool ok = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (c.assign[v] < 0 || c.assign[v] >= c.k) {
      std::cout << "vertex " << v << ": color " << c.assign[v] << " outside [0, "
                << c.k << ")\n";
      ok = false;
    }
  }
  if (!ok) return kExitInvalid;
  const DefectVector def = defects(g, c);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (def[v] != d) {
      std::cout << "vertex " << v << ": color " << c.assign[v] << ", " << def[v]
                << " same-colored neighbors, expected " << d << " (diff "
                << (def[v] - d > 0 ? "+" : "") << def[v] - d << ")\n";
      ok = false;
    }
  }
  std::cout << (ok ? "valid" : "invalid") << '\n';
  return ok ? kExitOk : kExitInvalid;
}

// ---- generate ------------------------------------------------------------

int cmd_generate(const std::string& family, int n, int m, std::uint64_t seed,
                 double p, const std::string& format, const std::string& out) {
  Graph g;
  bool seeded = false;
  if (family == "random-cactus") {
    g = random_cactus(n, seed);
    seeded = true;
  } else if (family == "planted-cactus") {
    g = planted_cactus(n, seed, std::max(2, m));
    seeded = true;
  } else if (family == "random-block-graph") {
    g = random_block_graph(n, seed);
    seeded = true;
  } else if (family == "random-gnp") {
    g = random_gnp(n, p, seed);
    seeded = true;
  } else if (family == "bowtie") {
    g = bowtie_graph();
  } else if (family == "octahedron") {
    g = octahedron_graph();
  } else if (family == "icosahedron") {
    g = icosahedron_graph();
  } else if (const auto f = family_from_name(family)) {
    const bool product =
        *f == Family::kCartesianK2Complete || *f == Family::kCategoricalK2Complete;
    g = gen_family({*f, product && m > 0 ? m : n});
  } else {
    throw Error(ErrorKind::kBadParameter, "unknown family: " + family);
  }
  if (seeded) std::cerr << "seed=" << seed << '\n';
  write_output(out, write_graph(g, parse_format(format)));
  return kExitOk;
}

// ---- reduce --------------------------------------------------------------

struct ReduceArgs {
  std::string kind;
  std::string input;
  std::string format = "edgelist";
  int k = 3;
  int d = 1;
  bool strict = false;
  bool triangles = false;
  bool check = false;
  std::string out;
  std::string map_out;
  std::uint64_t budget = kDefaultNodeBudget;
};

int cmd_reduce(const ReduceArgs& a) {
  Reduction r;
  Graph source;
  std::optional<NaeFormula> formula;
  int source_k = a.k;
  if (a.kind == "nae3sat") {
    formula = read_nae_formula(read_text_file(a.input), a.strict);
    r = reduce_nae3sat(*formula, a.triangles);
  } else {
    source = read_graph_file(a.input, parse_format(a.format));
    if (a.kind == "coloring") {
      r = reduce_coloring_to_exact(source, a.k, a.d);
    } else if (a.kind == "planar") {
      r = reduce_planar_variant(source, a.d);
    } else if (a.kind == "increment") {
      r = reduce_increment_defect(source, a.d);
      source_k = 2;
    }
  }
  write_output(a.out, write_graph(r.graph, parse_format(a.format)));
  std::string map_path = a.map_out;
  if (map_path.empty() && !a.out.empty() && a.out != "-") map_path = a.out + ".map.json";
  if (!map_path.empty()) write_output(map_path, r.map.to_json() + "\n");
  if (!a.check) return kExitOk;

  // Both sides decided by exhaustive search.
  bool source_yes = false;
  if (formula) {
    source_yes = nae_solve_brute(*formula).has_value();
  } else if (a.kind == "increment") {
    source_yes = brute_solve(source, 2, a.d, {a.budget}).yes;
  } else {
    source_yes = k_colorable(source, source_k, nullptr, a.budget);
  }
  const int target_k = a.kind == "increment" || formula ? 2 : source_k;
  const DecisionResult target = brute_solve(r.graph, target_k, r.map.target_d, {a.budget});
  std::cerr << "check: source " << (source_yes ? "yes" : "no") << ", target "
            << (target.yes ? "yes" : "no");
  if (source_yes != target.yes) {
    std::cerr << " MISMATCH\n";
    return kExitInvalid;
  }
  if (target.yes) {
    lift_solution(r.map, target.witness);
    std::cerr << ", lifted solution verified";
  }
  std::cerr << "\n";
  return kExitOk;
}

// ---- bench ---------------------------------------------------------------

int cmd_bench(const std::string& target, const std::vector<int>& sizes, int count,
              std::uint64_t seed, int d) {
  for (int n : sizes) {
    double total = 0;
    int finite = 0;
    for (int i = 0; i < count; ++i) {
      const std::uint64_t s = seed + static_cast<std::uint64_t>(n) * 1'000'003ull + i;
      Graph g;
      if (target == "cactus") {
        g = i % 2 == 0 ? random_cactus(n, s, i % 4 == 0 ? 0.0 : 0.2)
                       : planted_cactus(n, s, 2 + i % 4 / 2);
      } else if (target == "blockgraph") {
        g = random_block_graph(n, s);
      } else {
        throw Error(ErrorKind::kBadParameter, "unknown bench target: " + target);
      }
      const auto t0 = std::chrono::steady_clock::now();
      const SolveOutcome o = target == "cactus" ? cactus_chi2(g) : blockgraph_chi(g, d);
      total += std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
      finite += o.is_finite();
    }
    std::cout << json{{"target", target}, {"n", n},         {"count", count},
                      {"seed", seed},     {"finite", finite}, {"total_ms", total}}
                     .dump()
              << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact defective coloring solver"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Decide or optimize exact (k, d)-colorings");
  solve_cmd->add_option("input", solve_args.input, "Graph file")->required();
  solve_cmd->add_option("--d", solve_args.d, "Defect d")->required();
  auto* k_opt = solve_cmd->add_option("--k", solve_args.k, "Number of colors (decision)");
  auto* chi_opt = solve_cmd->add_flag("--chi", solve_args.chi, "Compute the minimum k");
  k_opt->excludes(chi_opt);
  solve_cmd->add_option("--algorithm", solve_args.algorithm)
      ->check(CLI::IsMember({"auto", "brute", "cactus", "blockgraph", "closedform"}));
  solve_cmd->add_option("--format", solve_args.format)
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  solve_cmd->add_option("--budget", solve_args.budget, "Search node budget");
  solve_cmd->add_option("--threads", solve_args.threads, "Oracle threads")
      ->check(CLI::Range(1, 256));

  std::string verify_graph, verify_coloring, verify_format = "edgelist";
  int verify_d = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring");
  verify_cmd->add_option("graph", verify_graph)->required();
  verify_cmd->add_option("coloring", verify_coloring, "Coloring file or JSON report")
      ->required();
  verify_cmd->add_option("--d", verify_d)->required();
  verify_cmd->add_option("--format", verify_format)
      ->check(CLI::IsMember({"edgelist", "dimacs"}));

  std::string gen_family, gen_format = "edgelist", gen_out;
  int gen_n = 0, gen_m = 0;
  std::uint64_t gen_seed = 1;
  double gen_p = 0.3;
  auto* gen_cmd = app.add_subcommand("generate", "Write a graph from a named family");
  gen_cmd->add_option("family", gen_family)->required();
  gen_cmd->add_option("--n", gen_n, "Order");
  gen_cmd->add_option("--m", gen_m,
                      "Clique order for the K2 products; planted colors for planted-cactus");
  gen_cmd->add_option("--seed", gen_seed);
  gen_cmd->add_option("--p", gen_p, "Edge probability for random-gnp");
  gen_cmd->add_option("--format", gen_format)->check(CLI::IsMember({"edgelist", "dimacs"}));
  gen_cmd->add_option("-o,--out", gen_out);

  ReduceArgs red;
  auto* red_cmd = app.add_subcommand("reduce", "Build a hardness reduction instance");
  red_cmd->add_option("kind", red.kind)
      ->required()
      ->check(CLI::IsMember({"coloring", "planar", "increment", "nae3sat"}));
  red_cmd->add_option("input", red.input)->required();
  red_cmd->add_option("--k", red.k);
  red_cmd->add_option("--d", red.d);
  red_cmd->add_option("--format", red.format)->check(CLI::IsMember({"edgelist", "dimacs"}));
  red_cmd->add_flag("--strict", red.strict, "Reject clauses that repeat a variable");
  red_cmd->add_flag("--triangles", red.triangles, "Use triangles for variable gadgets");
  red_cmd->add_flag("--check", red.check, "Decide source and target by brute force");
  red_cmd->add_option("-o,--out", red.out, "Graph output (default stdout)");
  red_cmd->add_option("--map", red.map_out, "JSON map output");
  red_cmd->add_option("--budget", red.budget);

  std::string bench_target;
  std::vector<int> bench_sizes{250, 500, 1000, 2000};
  int bench_count = 10, bench_d = 2;
  std::uint64_t bench_seed = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Time the polynomial solvers");
  bench_cmd->add_option("target", bench_target)
      ->required()
      ->check(CLI::IsMember({"cactus", "blockgraph"}));
  bench_cmd->add_option("--sizes", bench_sizes)->delimiter(',');
  bench_cmd->add_option("--count", bench_count);
  bench_cmd->add_option("--seed", bench_seed);
  bench_cmd->add_option("--d", bench_d, "Defect for blockgraph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_args);
    if (*verify_cmd) return cmd_verify(verify_graph, verify_coloring, verify_d, verify_format);
    if (*gen_cmd) {
      return cmd_generate(gen_family, gen_n, gen_m, gen_seed, gen_p, gen_format, gen_out);
    }
    if (*red_cmd) return cmd_reduce(red);
    if (*bench_cmd) {
      return cmd_bench(bench_target, bench_sizes, bench_count, bench_seed, bench_d);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnknown;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

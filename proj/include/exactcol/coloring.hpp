#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "exactcol/graph.hpp"

namespace exactcol {

// Total assignment of colors in [0, k). Colors may go unused: an empty color
// class induces the empty graph, which is d-regular for every d.
struct Coloring {
  int k = 0;
  std::vector<int> assign;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Per vertex, the number of neighbors sharing its color.
using DefectVector = std::vector<int>;

// Throws Error(kLengthMismatch) when c does not cover g.
DefectVector defects(const Graph& g, const Coloring& c);

// Every vertex has exactly d neighbors of its own color, i.e. every color
// class induces a d-regular subgraph. False (never throws) on malformed
// colorings: wrong length or colors outside [0, k).
bool is_exact_coloring(const Graph& g, const Coloring& c, int d);

inline bool is_proper(const Graph& g, const Coloring& c) {
  return is_exact_coloring(g, c, 0);
}

// Necessary condition for an exact (k, d)-coloring: d <= min degree and every
// connected component has at least d + 1 vertices.
bool feasibility_precheck(const Graph& g, int d);

// The exact d-defective chromatic number together with a witness, or the
// infinite case when no exact coloring exists for any k.
class SolveOutcome {
 public:
  struct Finite {
    int chi = 0;
    Coloring witness;
  };
  struct Infeasible {};

  static SolveOutcome finite(int chi, Coloring witness) {
    return SolveOutcome(Finite{chi, std::move(witness)});
  }
  static SolveOutcome infeasible() { return SolveOutcome(Infeasible{}); }

  bool is_finite() const noexcept {
    return std::holds_alternative<Finite>(state_);
  }
  // nullopt stands for infinity.
  std::optional<int> value() const {
    if (!is_finite()) return std::nullopt;
    return std::get<Finite>(state_).chi;
  }
  int chi() const { return std::get<Finite>(state_).chi; }
  const Coloring& witness() const { return std::get<Finite>(state_).witness; }

 private:
  explicit SolveOutcome(std::variant<Finite, Infeasible> state)
      : state_(std::move(state)) {}

  std::variant<Finite, Infeasible> state_;
};

std::string describe(const SolveOutcome& outcome);

// Text format: a line with k, then one 0-based color per line in vertex
// order. Throws ParseError.
Coloring read_coloring(std::string_view text);
std::string write_coloring(const Coloring& c);

// Renumbers colors by first appearance and sets k to the number used.
Coloring compact(const Coloring& c);

}  // namespace exactcol

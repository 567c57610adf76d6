#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "thue/graph.hpp"

namespace thue {

enum class Status { Sat, Unsat, BudgetExceeded };

const char* to_string(Status s);

struct Symmetry {
  /// Fix the star at the first maximum-degree vertex to colors 0..d-1 and
  /// only ever open the smallest unused color. Ignored under constraints.
  bool colors = true;
  /// Require sibling pendant edges (same center, undirected) to carry
  /// increasing colors in leaf order. Ignored under constraints.
  bool pendants = true;
};

struct ThueQuery {
  Graph graph;
  /// Palette {0..k-1}. With constraints, 0 means "max constrained color + 1".
  std::size_t palette_size = 0;
  std::optional<ColorConstraint> constraints;
  /// Only squares of half length <= this bound are forbidden.
  std::optional<std::size_t> max_half_len;
  bool enumerate_all = false;
  /// When enumerating, report each solution class under color permutation
  /// only once (each reported coloring is relabeled by first appearance).
  bool quotient = false;
  /// Maximum number of search nodes (color trials); unlimited when absent.
  std::optional<std::uint64_t> budget;
  /// Symmetry breaking. Defaults: full for decide_thue, none for
  /// enumerate_colorings (colors only when quotienting).
  std::optional<Symmetry> symmetry;
};

struct SolveResult {
  Status status = Status::Unsat;
  std::optional<EdgeColoring> coloring;
  std::uint64_t nodes = 0;
};

/// Exact backtracking search for a nonrepetitive coloring.
///
/// Edges are colored most-constrained first (fewest remaining colors, then
/// lowest id), colors ascending. Each trial forward-checks the colors of
/// conflicting edges (those that would form a two-edge square) and then
/// looks for a square path through the new edge among colored edges only.
/// Single-threaded, so the returned coloring is deterministic.
SolveResult decide_thue(const ThueQuery& q);

struct EnumerationResult {
  /// Sat if at least one coloring was found and the search completed,
  /// Unsat if it completed with none, BudgetExceeded otherwise.
  Status status = Status::Unsat;
  std::vector<EdgeColoring> colorings;
  std::uint64_t nodes = 0;
};

/// Every coloring satisfying the query, each exactly once. `visit` may
/// return false to stop early; when given, colorings are not collected.
EnumerationResult enumerate_colorings(const ThueQuery& q,
                                      const std::function<bool(const EdgeColoring&)>& visit = {});

struct ThueNumberResult {
  Status status = Status::Unsat;
  std::optional<std::size_t> value;
  std::optional<EdgeColoring> coloring;
  std::uint64_t nodes = 0;
};

/// Least k admitting a coloring. Starts at the maximum degree for undirected
/// graphs and at 1 for directed ones; 0 for graphs without edges. The budget
/// is shared by all k tried.
ThueNumberResult thue_number(const Graph& g, std::optional<std::size_t> max_half_len = std::nullopt,
                             std::optional<std::uint64_t> budget = std::nullopt);

/// Relabels colors in order of first appearance along edge ids.
EdgeColoring canonical_relabel(const EdgeColoring& c);

}  // namespace thue

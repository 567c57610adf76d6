#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thue/graph.hpp"

namespace thue {

/// Literal +v / -v for variable v in 1..num_vars.
using Literal = int;
using Clause = std::vector<Literal>;

struct CNFFormula {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const CNFFormula&, const CNFFormula&) = default;
};

struct QBFInstance {
  std::vector<int> universal;
  std::vector<int> existential;
  CNFFormula matrix;

  friend bool operator==(const QBFInstance&, const QBFInstance&) = default;
};

/// values[v-1] is the value of variable v.
using Assignment = std::vector<bool>;

inline constexpr std::size_t kSatBruteforceCap = 25;
inline constexpr std::size_t kForallExistsCap = 20;

/// Throws InvalidArgument on literals outside 1..num_vars.
void validate(const CNFFormula& f);
void validate(const QBFInstance& q);

bool evaluate(const CNFFormula& f, const Assignment& a);

/// Lexicographically first satisfying assignment (x1 most significant,
/// false before true), or nullopt.
std::optional<Assignment> sat_bruteforce(const CNFFormula& f);

/// True iff every assignment of the universal block extends to a model.
bool forall_exists(const QBFInstance& q);

/// Largest number of occurrences of a single signed literal.
std::size_t max_literal_occurrence(const CNFFormula& f);

/// Proper 3-edge-coloring of a cubic graph (colors 0..2), or nullopt.
std::optional<EdgeColoring> three_edge_colorable(const Graph& g);

bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& c);

/// DIMACS CNF. Comments ("c ...") and a single "p cnf n m" header; clauses
/// may span lines and end with 0. Errors carry the line number.
CNFFormula parse_dimacs(const std::string& text);

/// QDIMACS restricted to an optional "a ... 0" line followed by an optional
/// "e ... 0" line. Every variable used in a clause must be quantified.
QBFInstance parse_qdimacs(const std::string& text);

std::string to_dimacs(const CNFFormula& f);
std::string to_qdimacs(const QBFInstance& q);

}  // namespace thue

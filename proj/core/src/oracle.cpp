#include "thue/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace thue {

void validate(const CNFFormula& f) {
  for (const auto& clause : f.clauses) {
    for (Literal l : clause) {
      if (l == 0 || static_cast<std::size_t>(std::abs(l)) > f.num_vars) {
        throw InvalidArgument("literal " + std::to_string(l) + " outside 1.." + std::to_string(f.num_vars));
      }
    }
  }
}

void validate(const QBFInstance& q) {
  validate(q.matrix);
  std::set<int> seen;
  for (const auto* block : {&q.universal, &q.existential}) {
    for (int v : *block) {
      if (v < 1 || static_cast<std::size_t>(v) > q.matrix.num_vars) {
        throw InvalidArgument("quantified variable " + std::to_string(v) + " out of range");
      }
      if (!seen.insert(v).second) throw InvalidArgument("variable " + std::to_string(v) + " quantified twice");
    }
  }
  for (const auto& clause : q.matrix.clauses) {
    for (Literal l : clause) {
      if (!seen.count(std::abs(l))) {
        throw InvalidArgument("variable " + std::to_string(std::abs(l)) + " is not quantified");
      }
    }
  }
}

bool evaluate(const CNFFormula& f, const Assignment& a) {
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (Literal l : clause) {
      if (a.at(static_cast<std::size_t>(std::abs(l)) - 1) == (l > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

namespace {

// Clauses as (positive mask, negative mask) over bit (v-1).
struct MaskClause {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
};

std::vector<MaskClause> to_masks(const CNFFormula& f) {
  std::vector<MaskClause> out;
  for (const auto& clause : f.clauses) {
    MaskClause m;
    for (Literal l : clause) (l > 0 ? m.pos : m.neg) |= 1u << (std::abs(l) - 1);
    out.push_back(m);
  }
  return out;
}

bool satisfied(const std::vector<MaskClause>& clauses, std::uint32_t values) {
  for (const auto& c : clauses) {
    if (!((c.pos & values) | (c.neg & ~values))) return false;
  }
  return true;
}

}  // namespace

std::optional<Assignment> sat_bruteforce(const CNFFormula& f) {
  validate(f);
  const std::size_t n = f.num_vars;
  if (n > kSatBruteforceCap) throw InvalidArgument("sat_bruteforce is capped at 25 variables");
  const auto clauses = to_masks(f);
  // Row r assigns x1 the most significant bit of r.
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r) {
    std::uint32_t values = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (r >> (n - 1 - v) & 1) values |= 1u << v;
    }
    if (satisfied(clauses, values)) {
      Assignment a(n);
      for (std::size_t v = 0; v < n; ++v) a[v] = values >> v & 1;
      return a;
    }
  }
  return std::nullopt;
}

bool forall_exists(const QBFInstance& q) {
  validate(q);
  if (q.universal.size() + q.existential.size() > kForallExistsCap) {
    throw InvalidArgument("forall_exists is capped at 20 quantified variables");
  }
  const auto clauses = to_masks(q.matrix);
  auto spread = [](const std::vector<int>& vars, std::uint64_t bits) {
    std::uint32_t values = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (bits >> i & 1) values |= 1u << (vars[i] - 1);
    }
    return values;
  };
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << q.universal.size()); ++x) {
    const std::uint32_t xv = spread(q.universal, x);
    bool extends = false;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << q.existential.size()) && !extends; ++y) {
      extends = satisfied(clauses, xv | spread(q.existential, y));
    }
    if (!extends) return false;
  }
  return true;
}

std::size_t max_literal_occurrence(const CNFFormula& f) {
  std::map<Literal, std::size_t> count;
  std::size_t best = 0;
  for (const auto& clause : f.clauses) {
    for (Literal l : clause) best = std::max(best, ++count[l]);
  }
  return best;
}

bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& c) {
  if (c.size() != g.edge_count() || !c.is_total()) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::set<Color> seen;
    for (const auto& inc : g.out(v)) {
      if (!seen.insert(c[inc.edge]).second) return false;
    }
    if (g.directed()) {
      for (const auto& inc : g.in(v)) {
        if (!seen.insert(c[inc.edge]).second) return false;
      }
    }
  }
  return true;
}

std::optional<EdgeColoring> three_edge_colorable(const Graph& g) {
  if (g.directed()) throw InvalidArgument("three_edge_colorable requires an undirected graph");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) throw InvalidArgument("graph is not cubic");
  }
  const std::size_t m = g.edge_count();
  // At a cubic vertex two colored edges force the third, so coloring in BFS
  // edge order propagates quickly.
  std::vector<EdgeId> order;
  std::vector<char> queued(m, 0);
  for (EdgeId s = 0; s < m; ++s) {
    if (queued[s]) continue;
    std::size_t head = order.size();
    order.push_back(s);
    queued[s] = 1;
    while (head < order.size()) {
      const Edge& e = g.edge(order[head++]);
      for (VertexId x : {e.u, e.v}) {
        for (const auto& inc : g.out(x)) {
          if (!queued[inc.edge]) {
            queued[inc.edge] = 1;
            order.push_back(inc.edge);
          }
        }
      }
    }
  }

  std::vector<Color> colors(m, EdgeColoring::kUnassigned);
  auto fits = [&](EdgeId e, Color c) {
    const Edge& ed = g.edge(e);
    for (VertexId x : {ed.u, ed.v}) {
      for (const auto& inc : g.out(x)) {
        if (inc.edge != e && colors[inc.edge] == c) return false;
      }
    }
    return true;
  };
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == m) return true;
    const EdgeId e = order[i];
    for (Color c = 0; c < 3; ++c) {
      if (!fits(e, c)) continue;
      colors[e] = c;
      if (place(i + 1)) return true;
      // The first edge of a component can be fixed to color 0.
      if (i == 0) break;
    }
    colors[e] = EdgeColoring::kUnassigned;
    return false;
  };
  if (!place(0)) return std::nullopt;
  EdgeColoring out(colors, 3);
  if (!is_proper_edge_coloring(g, out)) throw Error("internal error: improper 3-edge-coloring");
  return out;
}

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

struct DimacsBody {
  std::size_t num_vars = 0;
  std::size_t num_clauses = 0;
  std::vector<std::pair<char, std::vector<int>>> quantifiers;
  std::vector<Clause> clauses;
};

long long to_int(const std::string& s, std::size_t line) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + s + "'", line);
  }
  if (pos != s.size()) throw ParseError("expected an integer, got '" + s + "'", line);
  return v;
}

DimacsBody parse_body(const std::string& text, bool allow_quantifiers) {
  DimacsBody body;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  bool header = false;
  Clause current;
  std::size_t clause_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream ls(raw);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c") continue;
    if (first == "p") {
      if (header) throw ParseError("duplicate header", line_no);
      std::string fmt, n, m, extra;
      if (!(ls >> fmt >> n >> m) || fmt != "cnf" || (ls >> extra)) {
        throw ParseError("header must be 'p cnf <vars> <clauses>'", line_no);
      }
      const auto nv = to_int(n, line_no);
      const auto nc = to_int(m, line_no);
      if (nv < 0 || nc < 0) throw ParseError("negative count in header", line_no);
      body.num_vars = static_cast<std::size_t>(nv);
      body.num_clauses = static_cast<std::size_t>(nc);
      header = true;
      continue;
    }
    if (!header) throw ParseError("missing 'p cnf' header", line_no);
    if (first == "a" || first == "e") {
      if (!allow_quantifiers) throw ParseError("quantifier line in plain CNF", line_no);
      if (!body.clauses.empty() || !current.empty()) {
        throw ParseError("quantifier line after clauses", line_no);
      }
      const char kind = first[0];
      if (!body.quantifiers.empty() && (body.quantifiers.back().first == kind || kind == 'a')) {
        throw ParseError("unsupported quantifier prefix; expected one 'a' block then one 'e' block", line_no);
      }
      std::vector<int> vars;
      std::string tok;
      bool closed = false;
      while (ls >> tok) {
        const auto v = to_int(tok, line_no);
        if (v == 0) {
          closed = true;
          break;
        }
        if (v < 0 || static_cast<std::size_t>(v) > body.num_vars) {
          throw ParseError("quantified variable " + tok + " out of range", line_no);
        }
        vars.push_back(static_cast<int>(v));
      }
      if (!closed || (ls >> tok)) throw ParseError("quantifier line must end with a single 0", line_no);
      body.quantifiers.emplace_back(kind, std::move(vars));
      continue;
    }
    if (first.find_first_not_of("-0123456789") != std::string::npos) {
      throw ParseError("unexpected token '" + first + "'", line_no);
    }
    std::string tok = first;
    do {
      const auto lit = to_int(tok, line_no);
      if (current.empty()) clause_line = line_no;
      if (lit == 0) {
        body.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::llabs(lit)) > body.num_vars) {
        throw ParseError("literal " + tok + " exceeds the declared variable count", line_no);
      }
      current.push_back(static_cast<Literal>(lit));
    } while (ls >> tok);
  }
  if (!header) throw ParseError("missing 'p cnf' header", line_no);
  if (!current.empty()) throw ParseError("clause is not terminated by 0", clause_line);
  if (body.clauses.size() != body.num_clauses) {
    throw ParseError("header declares " + std::to_string(body.num_clauses) + " clauses, found " +
                         std::to_string(body.clauses.size()),
                     line_no);
  }
  return body;
}

}  // namespace

CNFFormula parse_dimacs(const std::string& text) {
  auto body = parse_body(text, false);
  return CNFFormula{body.num_vars, std::move(body.clauses)};
}

QBFInstance parse_qdimacs(const std::string& text) {
  auto body = parse_body(text, true);
  QBFInstance q;
  q.matrix = CNFFormula{body.num_vars, std::move(body.clauses)};
  for (auto& [kind, vars] : body.quantifiers) (kind == 'a' ? q.universal : q.existential) = std::move(vars);
  try {
    validate(q);
  } catch (const InvalidArgument& ex) {
    throw ParseError(ex.what());
  }
  return q;
}

std::string to_dimacs(const CNFFormula& f) {
  std::ostringstream os;
  os << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& clause : f.clauses) {
    for (Literal l : clause) os << l << ' ';
    os << "0\n";
  }
  return os.str();
}

std::string to_qdimacs(const QBFInstance& q) {
  std::ostringstream os;
  os << "p cnf " << q.matrix.num_vars << ' ' << q.matrix.clauses.size() << '\n';
  if (!q.universal.empty()) {
    os << 'a';
    for (int v : q.universal) os << ' ' << v;
    os << " 0\n";
  }
  if (!q.existential.empty()) {
    os << 'e';
    for (int v : q.existential) os << ' ' << v;
    os << " 0\n";
  }
  for (const auto& clause : q.matrix.clauses) {
    for (Literal l : clause) os << l << ' ';
    os << "0\n";
  }
  return os.str();
}

}  // namespace thue

#include "thue/solver.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "thue/paths.hpp"

namespace thue {

const char* to_string(Status s) {
  switch (s) {
    case Status::Sat: return "sat";
    case Status::Unsat: return "unsat";
    case Status::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

EdgeColoring canonical_relabel(const EdgeColoring& c) {
  std::map<Color, Color> relabel;
  std::vector<Color> out(c.size(), EdgeColoring::kUnassigned);
  for (EdgeId e = 0; e < c.size(); ++e) {
    if (!c.is_assigned(e)) continue;
    auto [it, fresh] = relabel.try_emplace(c[e], static_cast<Color>(relabel.size()));
    out[e] = it->second;
  }
  return EdgeColoring(std::move(out), c.palette_size());
}

namespace {

class Search {
 public:
  Search(const ThueQuery& q, Symmetry sym, std::function<bool(const EdgeColoring&)> on_solution)
      : g_(q.graph),
        constrained_(q.constraints.has_value()),
        budget_(q.budget),
        on_solution_(std::move(on_solution)),
        searcher_(g_, std::vector<Color>(g_.edge_count(), EdgeColoring::kUnassigned), q.max_half_len) {
    const std::size_t m = g_.edge_count();
    k_ = q.palette_size;
    if (constrained_) {
      if (q.constraints->size() != m) throw InvalidArgument("constraints must cover every edge");
      Color top = -1;
      for (EdgeId e = 0; e < m; ++e) top = std::max(top, q.constraints->allowed(e).back());
      if (k_ == 0) k_ = static_cast<std::size_t>(top) + 1;
      if (static_cast<std::size_t>(top) >= k_) throw InvalidArgument("constraint color outside the palette");
    }
    if (k_ == 0) throw InvalidArgument("palette size must be at least 1");

    allowed_.assign(m * k_, 0);
    domain_.assign(m, 0);
    blocked_.assign(m * k_, 0);
    for (EdgeId e = 0; e < m; ++e) {
      if (constrained_) {
        for (Color c : q.constraints->allowed(e)) allowed_[e * k_ + c] = 1;
        domain_[e] = q.constraints->allowed(e).size();
      } else {
        std::fill_n(allowed_.begin() + static_cast<std::ptrdiff_t>(e * k_), k_, 1);
        domain_[e] = k_;
      }
    }

    conflicts_.resize(m);
    for (EdgeId e = 0; e < m; ++e) {
      const Edge& a = g_.edge(e);
      std::set<EdgeId> near;
      if (g_.directed()) {
        for (const auto& inc : g_.out(a.v)) near.insert(inc.edge);
        for (const auto& inc : g_.in(a.u)) near.insert(inc.edge);
      } else {
        for (const auto& inc : g_.out(a.u)) near.insert(inc.edge);
        for (const auto& inc : g_.out(a.v)) near.insert(inc.edge);
      }
      near.erase(e);
      conflicts_[e].assign(near.begin(), near.end());
    }

    colors_.assign(m, EdgeColoring::kUnassigned);
    use_count_.assign(k_, 0);
    if (!constrained_) {
      new_color_rule_ = sym.colors;
      fix_star_ = sym.colors && !g_.directed();
      if (sym.pendants && !g_.directed()) setup_pendants();
      // Opening colors in order is only compatible with pendant ordering if
      // a pendant group never has to skip over a fresh color.
      if (!pendant_prev_.empty()) new_color_rule_ = false;
    }
  }

  Status run() {
    if (fix_star_ && !assign_star()) return stopped_ ? Status::BudgetExceeded : Status::Unsat;
    recurse();
    if (stopped_ && budget_hit_) return Status::BudgetExceeded;
    return found_any_ ? Status::Sat : Status::Unsat;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void setup_pendants() {
    pendant_prev_.clear();
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      std::optional<EdgeId> prev;
      for (const auto& inc : g_.out(v)) {
        if (g_.degree(inc.neighbor) != 1 || g_.degree(v) == 1) continue;
        if (prev) pendant_prev_[inc.edge] = *prev;
        if (prev) pendant_next_[*prev] = inc.edge;
        prev = inc.edge;
      }
    }
  }

  bool pendant_ok(EdgeId e, Color c) const {
    if (auto it = pendant_prev_.find(e); it != pendant_prev_.end()) {
      const Color p = colors_[it->second];
      if (p != EdgeColoring::kUnassigned && p >= c) return false;
    }
    if (auto it = pendant_next_.find(e); it != pendant_next_.end()) {
      const Color n = colors_[it->second];
      if (n != EdgeColoring::kUnassigned && n <= c) return false;
    }
    return true;
  }

  bool charge() {
    ++nodes_;
    if (budget_ && nodes_ > *budget_) {
      stopped_ = budget_hit_ = true;
      return false;
    }
    return true;
  }

  // Returns false if some conflicting edge lost its last color.
  bool assign(EdgeId e, Color c) {
    colors_[e] = c;
    searcher_.assign(e, c);
    ++use_count_[c];
    bool ok = true;
    for (EdgeId f : conflicts_[e]) {
      if (blocked_[f * k_ + c]++ == 0 && allowed_[f * k_ + c]) {
        if (--domain_[f] == 0 && colors_[f] == EdgeColoring::kUnassigned) ok = false;
      }
    }
    return ok;
  }

  void unassign(EdgeId e) {
    const Color c = colors_[e];
    for (EdgeId f : conflicts_[e]) {
      if (--blocked_[f * k_ + c] == 0 && allowed_[f * k_ + c]) ++domain_[f];
    }
    --use_count_[c];
    searcher_.unassign(e);
    colors_[e] = EdgeColoring::kUnassigned;
  }

  bool assign_star() {
    VertexId center = 0;
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (g_.degree(v) > g_.degree(center)) center = v;
    }
    const auto star = g_.out(center);
    if (star.size() > k_) return false;
    Color c = 0;
    for (const auto& inc : star) {
      if (!charge()) return false;
      const bool ok = assign(inc.edge, c++);
      if (!ok || searcher_.has_square_through(inc.edge)) return false;
    }
    return true;
  }

  Color max_used() const {
    for (auto c = static_cast<Color>(k_) - 1; c >= 0; --c) {
      if (use_count_[c]) return c;
    }
    return -1;
  }

  void recurse() {
    EdgeId best = 0;
    std::size_t best_domain = SIZE_MAX;
    for (EdgeId e = 0; e < colors_.size(); ++e) {
      if (colors_[e] == EdgeColoring::kUnassigned && domain_[e] < best_domain) {
        best = e;
        best_domain = domain_[e];
      }
    }
    if (best_domain == SIZE_MAX) {
      found_any_ = true;
      if (!on_solution_(EdgeColoring(colors_, k_))) stopped_ = true;
      return;
    }
    const EdgeId e = best;
    const Color limit = new_color_rule_ ? max_used() + 1 : static_cast<Color>(k_) - 1;
    for (Color c = 0; c <= limit && c < static_cast<Color>(k_); ++c) {
      if (!allowed_[e * k_ + c] || blocked_[e * k_ + c]) continue;
      if (!pendant_ok(e, c)) continue;
      if (!charge()) return;
      if (assign(e, c) && !searcher_.has_square_through(e)) recurse();
      unassign(e);
      if (stopped_) return;
    }
  }

  const Graph& g_;
  bool constrained_;
  std::optional<std::uint64_t> budget_;
  std::function<bool(const EdgeColoring&)> on_solution_;
  SquareSearcher searcher_;
  std::size_t k_ = 0;
  std::vector<char> allowed_;
  std::vector<std::size_t> domain_;
  std::vector<std::uint32_t> blocked_;
  std::vector<std::vector<EdgeId>> conflicts_;
  std::vector<Color> colors_;
  std::vector<std::size_t> use_count_;
  std::map<EdgeId, EdgeId> pendant_prev_, pendant_next_;
  bool new_color_rule_ = false;
  bool fix_star_ = false;
  bool found_any_ = false;
  bool stopped_ = false;
  bool budget_hit_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolveResult decide_thue(const ThueQuery& q) {
  SolveResult result;
  if (q.graph.edge_count() == 0) {
    if (q.palette_size == 0 && !q.constraints) throw InvalidArgument("palette size must be at least 1");
    result.status = Status::Sat;
    result.coloring = EdgeColoring(std::size_t{0}, q.palette_size);
    return result;
  }
  Search search(q, q.symmetry.value_or(Symmetry{}), [&](const EdgeColoring& c) {
    result.coloring = c;
    return false;
  });
  result.status = search.run();
  result.nodes = search.nodes();
  return result;
}

EnumerationResult enumerate_colorings(const ThueQuery& q, const std::function<bool(const EdgeColoring&)>& visit) {
  EnumerationResult result;
  const Symmetry sym = q.symmetry.value_or(q.quotient ? Symmetry{true, false} : Symmetry{false, false});
  std::set<std::vector<Color>> seen;
  auto report = [&](const EdgeColoring& c) {
    EdgeColoring out = c;
    if (q.quotient) {
      out = canonical_relabel(c);
      const auto& cs = out.colors();
      if (!seen.emplace(cs.begin(), cs.end()).second) return true;
    }
    if (visit) return visit(out);
    result.colorings.push_back(std::move(out));
    return true;
  };
  if (q.graph.edge_count() == 0) {
    report(EdgeColoring(std::size_t{0}, q.palette_size));
    result.status = Status::Sat;
    return result;
  }
  Search search(q, sym, report);
  result.status = search.run();
  result.nodes = search.nodes();
  return result;
}

ThueNumberResult thue_number(const Graph& g, std::optional<std::size_t> max_half_len,
                             std::optional<std::uint64_t> budget) {
  ThueNumberResult result;
  if (g.empty()) throw InvalidArgument("thue_number on an empty graph");
  if (g.edge_count() == 0) {
    result.status = Status::Sat;
    result.value = 0;
    result.coloring = EdgeColoring(std::size_t{0});
    return result;
  }
  std::size_t k = g.directed() ? 1 : g.max_degree();
  // |E| colors always suffice (all edges distinct), so the loop terminates.
  for (; k <= g.edge_count(); ++k) {
    ThueQuery q;
    q.graph = g;
    q.palette_size = k;
    q.max_half_len = max_half_len;
    if (budget) q.budget = *budget - std::min(*budget, result.nodes);
    const SolveResult r = decide_thue(q);
    result.nodes += r.nodes;
    if (r.status == Status::BudgetExceeded) {
      result.status = Status::BudgetExceeded;
      return result;
    }
    if (r.status == Status::Sat) {
      result.status = Status::Sat;
      result.value = k;
      result.coloring = r.coloring;
      return result;
    }
  }
  throw Error("no coloring with |E| colors; this cannot happen");
}

}  // namespace thue

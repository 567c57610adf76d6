#include "thue/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace thue {

namespace {

std::string w_name(Color j) { return "w" + std::to_string(j + 1); }

}  // namespace

ReductionArtifact reduce_3sat_directed(const CNFFormula& f) {
  validate(f);
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto size = f.clauses[j].size();
    if (size < 1 || size > 3) {
      throw InvalidArgument("clause " + std::to_string(j + 1) + " must have 1 to 3 literals");
    }
  }
  SatLayout lay;
  lay.n = f.num_vars;
  lay.m = f.clauses.size();
  lay.M = std::max<std::size_t>(1, max_literal_occurrence(f));
  lay.branch_len = lay.M + 1;
  const std::size_t L = lay.branch_len;
  const std::size_t N = L * lay.n + 2 * lay.m + 1;
  lay.snout_len = N;

  GraphBuilder b(true);
  std::vector<std::string> vtag;
  auto add = [&](std::size_t count, const std::string& tag) {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(b.add_vertex());
      vtag.push_back(tag);
    }
    return out;
  };
  lay.snout = add(N, "snout");
  for (std::size_t i = 0; i < lay.n; ++i) lay.begin.push_back(add(1, "x" + std::to_string(i + 1) + ".begin")[0]);
  lay.begin.push_back(add(1, "c")[0]);
  for (std::size_t i = 0; i < lay.n; ++i) {
    lay.true_branch.push_back(add(lay.M, "x" + std::to_string(i + 1) + ".true"));
    lay.false_branch.push_back(add(lay.M, "x" + std::to_string(i + 1) + ".false"));
  }
  for (std::size_t j = 0; j < lay.m; ++j) lay.clause.push_back(add(1, "clause" + std::to_string(j + 1))[0]);
  lay.clause.push_back(add(1, "d")[0]);

  std::vector<std::string> etag;
  auto edge = [&](VertexId u, VertexId v, Color c, bool snout, const std::string& tag) {
    b.add_edge(u, v);
    lay.base_edges.push_back({u, v});
    lay.base_colors.push_back(c);
    lay.base_in_snout.push_back(snout ? 1 : 0);
    etag.push_back(tag);
  };

  for (std::size_t i = 0; i + 1 < N; ++i) edge(lay.snout[i], lay.snout[i + 1], static_cast<Color>(i), true, "snout");
  edge(lay.snout[N - 1], lay.begin[0], static_cast<Color>(N - 1), true, "snout");

  for (std::size_t i = 0; i < lay.n; ++i) {
    for (int side = 0; side < 2; ++side) {
      const auto& inner = side == 0 ? lay.true_branch[i] : lay.false_branch[i];
      const std::string tag = "x" + std::to_string(i + 1) + (side == 0 ? ".true" : ".false");
      std::vector<VertexId> chain{lay.begin[i]};
      chain.insert(chain.end(), inner.begin(), inner.end());
      chain.push_back(lay.begin[i + 1]);
      for (std::size_t k = 0; k < L; ++k) edge(chain[k], chain[k + 1], static_cast<Color>(L * i + k), false, tag);
    }
  }

  const auto base = static_cast<Color>(L * lay.n);
  edge(lay.begin[lay.n], lay.clause[0], base, false, "clause1");
  // Detour vertices are handed out in branch order, clause by clause.
  std::vector<std::size_t> next_true(lay.n, 0), next_false(lay.n, 0);
  lay.detour.resize(lay.m);
  for (std::size_t j = 0; j < lay.m; ++j) {
    const std::string tag = "clause" + std::to_string(j + 1);
    for (Literal l : f.clauses[j]) {
      const auto var = static_cast<std::size_t>(std::abs(l)) - 1;
      auto& cursor = l > 0 ? next_true[var] : next_false[var];
      const auto& branch = l > 0 ? lay.true_branch[var] : lay.false_branch[var];
      if (cursor >= branch.size()) throw Error("internal error: branch capacity exhausted");
      const VertexId t = branch[cursor++];
      lay.detour[j].push_back(t);
      edge(lay.clause[j], t, base + static_cast<Color>(2 * j + 1), false, tag);
      edge(t, lay.clause[j + 1], base + static_cast<Color>(2 * j + 2), false, tag);
    }
  }

  ReductionArtifact art;
  art.kind = "3sat-directed";
  art.graph = b.build();
  art.coloring = EdgeColoring(lay.base_colors, N);
  art.palette_size = N;
  art.vertex_gadget = std::move(vtag);
  art.edge_gadget = std::move(etag);
  for (std::size_t j = 0; j < N; ++j) art.color_names.push_back(w_name(static_cast<Color>(j)));
  art.params = {{"n", lay.n}, {"m", lay.m}, {"M", lay.M}, {"branch_len", L}, {"snout_len", N}};
  art.layout = std::move(lay);
  return art;
}

ReductionArtifact reduce_3sat_undirected(const CNFFormula& f) {
  ReductionArtifact dir = reduce_3sat_directed(f);
  SatLayout lay = *dir.layout;
  const std::size_t N = lay.snout_len;
  const std::size_t base_count = lay.base_edges.size();

  // Direction-determining color t (a, b, c, d = 0..3) with index i (1..3)
  // for w color j.
  auto dd = [N](Color j, std::size_t i, int t) {
    return static_cast<Color>(N + 12 * static_cast<std::size_t>(j) + 4 * (i - 1) + static_cast<std::size_t>(t));
  };

  lay.rank.assign(base_count, 0);
  std::map<Color, std::size_t> seen;
  for (std::size_t e = 0; e < base_count; ++e) {
    if (!lay.base_in_snout[e]) lay.rank[e] = ++seen[lay.base_colors[e]];
    if (lay.rank[e] > 3) throw Error("internal error: color class larger than three outside the snout");
  }

  GraphBuilder b(false);
  b.add_vertices(dir.graph.vertex_count());
  std::vector<std::string> vtag = dir.vertex_gadget;
  std::vector<std::string> etag;
  std::vector<Color> colors;
  lay.expansion.assign(base_count, {});
  for (std::size_t e = 0; e < base_count; ++e) {
    const auto [p, q] = lay.base_edges[e];
    const Color j = lay.base_colors[e];
    const std::string& tag = dir.edge_gadget[e];
    auto fresh = [&] {
      vtag.push_back(tag);
      return b.add_vertex();
    };
    auto edge = [&](VertexId u, VertexId v, Color c) {
      b.add_edge(u, v);
      colors.push_back(c);
      etag.push_back(tag);
    };
    auto& ex = lay.expansion[e];
    if (lay.base_in_snout[e]) {
      std::array<VertexId, 3> mid{}, low{};
      for (auto& v : mid) v = fresh();
      const VertexId z1 = fresh();
      const VertexId z2 = fresh();
      for (auto& v : low) v = fresh();
      for (std::size_t i = 1; i <= 3; ++i) {
        edge(p, mid[i - 1], dd(j, i, 0));
        edge(mid[i - 1], z1, dd(j, i, 1));
      }
      edge(z1, z2, j);
      for (std::size_t k = 1; k <= 3; ++k) {
        edge(z2, low[k - 1], dd(j, k, 2));
        edge(low[k - 1], q, dd(j, k, 3));
      }
      ex = {mid[0], mid[1], mid[2], z1, z2, low[0], low[1], low[2]};
    } else {
      const std::size_t r = lay.rank[e];
      ex = {fresh(), fresh(), fresh(), fresh()};
      edge(p, ex[0], dd(j, r, 0));
      edge(ex[0], ex[1], dd(j, r, 1));
      edge(ex[1], ex[2], j);
      edge(ex[2], ex[3], dd(j, r, 2));
      edge(ex[3], q, dd(j, r, 3));
    }
  }

  ReductionArtifact art;
  art.kind = "3sat-undirected";
  art.graph = b.build();
  art.palette_size = 13 * N;
  art.coloring = EdgeColoring(std::move(colors), art.palette_size);
  art.vertex_gadget = std::move(vtag);
  art.edge_gadget = std::move(etag);
  art.color_names = dir.color_names;
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t i = 1; i <= 3; ++i) {
      for (const char* t : {"a", "b", "c", "d"}) {
        art.color_names.push_back(std::string(t) + std::to_string(i) + "^" + std::to_string(j + 1));
      }
    }
  }
  art.params = dir.params;
  art.layout = std::move(lay);
  return art;
}

ReductionArtifact reduce_qbf_restricted(const QBFInstance& q) {
  validate(q);
  if (q.universal.size() > 20) throw InvalidArgument("at most 20 universal variables are supported");
  ReductionArtifact art = reduce_3sat_undirected(q.matrix);
  art.kind = "qbf-restricted";
  SatLayout& lay = *art.layout;
  const std::size_t N = lay.snout_len;
  const std::size_t L = lay.branch_len;

  std::vector<std::vector<Color>> sets;
  for (Color c : art.coloring->colors()) sets.push_back({c});

  auto w_edge = [&](std::size_t base_edge) {
    const auto& ex = lay.expansion[base_edge];
    const auto e = lay.base_in_snout[base_edge] ? art.graph.find_edge(ex[3], ex[4]) : art.graph.find_edge(ex[1], ex[2]);
    return *e;
  };
  auto base_edge_between = [&](VertexId u, VertexId v) {
    for (std::size_t e = 0; e < lay.base_edges.size(); ++e) {
      if (lay.base_edges[e].u == u && lay.base_edges[e].v == v) return e;
    }
    throw Error("internal error: missing base edge");
  };

  lay.universal = q.universal;
  for (std::size_t idx = 0; idx < q.universal.size(); ++idx) {
    const auto var = static_cast<std::size_t>(q.universal[idx]) - 1;
    const auto snout_edge = L * var;  // snout edges come first, in color order
    const auto w0 = static_cast<Color>(L * var);
    const auto w1 = static_cast<Color>(13 * N + idx);
    const EdgeId t = w_edge(base_edge_between(lay.begin[var], lay.true_branch[var][0]));
    const EdgeId fl = w_edge(base_edge_between(lay.begin[var], lay.false_branch[var][0]));
    const EdgeId s = w_edge(snout_edge);
    sets[t] = {w1};
    sets[fl] = {w0};
    sets[s] = {w0, w1};
    lay.choice_edges.push_back({t, fl, s});
    lay.choice_colors.push_back({w0, w1});
    art.color_names.push_back(art.color_names[static_cast<std::size_t>(w0)] + "^1");
    art.color_names[static_cast<std::size_t>(w0)] += "^0";
  }
  art.palette_size = 13 * N + q.universal.size();
  art.coloring.reset();
  art.constraints = ColorConstraint(std::move(sets));
  art.params["universal"] = q.universal;
  art.params["existential"] = q.existential;
  return art;
}

EdgeColoring resolve_choices(const ReductionArtifact& art, std::uint64_t bits) {
  if (!art.constraints || !art.layout) throw InvalidArgument("artifact has no choice constraints");
  const auto& cons = *art.constraints;
  std::vector<Color> colors;
  for (EdgeId e = 0; e < cons.size(); ++e) colors.push_back(cons.allowed(e).front());
  const auto& lay = *art.layout;
  for (std::size_t i = 0; i < lay.choice_edges.size(); ++i) {
    colors[lay.choice_edges[i][2]] = lay.choice_colors[i][bits >> i & 1];
  }
  return EdgeColoring(std::move(colors), art.palette_size);
}

bool restricted_colorable(const ReductionArtifact& art, std::optional<std::uint64_t>* certificate) {
  if (!art.layout) throw InvalidArgument("artifact has no layout");
  const std::size_t x = art.layout->choice_edges.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << x); ++bits) {
    if (!find_square_path(art.graph, resolve_choices(art, bits))) {
      if (certificate) *certificate = bits;
      return true;
    }
  }
  if (certificate) certificate->reset();
  return false;
}

SquareWitness witness_square_path(const ReductionArtifact& art, const CNFFormula& f, const Assignment& a) {
  if (!art.layout || !art.coloring) throw InvalidArgument("artifact has no layout or coloring");
  const SatLayout& lay = *art.layout;
  if (f.num_vars != lay.n || f.clauses.size() != lay.m) throw InvalidArgument("formula does not match artifact");
  if (a.size() != f.num_vars || !evaluate(f, a)) throw InvalidArgument("assignment does not satisfy the formula");

  // Base path: snout, the branch opposite to each value, a true literal's
  // detour in each clause.
  std::vector<VertexId> base(lay.snout.begin(), lay.snout.end());
  base.push_back(lay.begin[0]);
  for (std::size_t i = 0; i < lay.n; ++i) {
    const auto& branch = a[i] ? lay.false_branch[i] : lay.true_branch[i];
    base.insert(base.end(), branch.begin(), branch.end());
    base.push_back(lay.begin[i + 1]);
  }
  base.push_back(lay.clause[0]);
  for (std::size_t j = 0; j < lay.m; ++j) {
    std::size_t p = 0;
    while (p < f.clauses[j].size()) {
      const Literal l = f.clauses[j][p];
      if (a[static_cast<std::size_t>(std::abs(l)) - 1] == (l > 0)) break;
      ++p;
    }
    base.push_back(lay.detour[j][p]);
    base.push_back(lay.clause[j + 1]);
  }

  SquareWitness w;
  if (art.graph.directed()) {
    w.vertices = base;
  } else {
    std::map<std::pair<VertexId, VertexId>, std::size_t> index;
    for (std::size_t e = 0; e < lay.base_edges.size(); ++e) index[{lay.base_edges[e].u, lay.base_edges[e].v}] = e;
    const std::size_t N = lay.snout_len;
    std::vector<std::size_t> path_edges;
    for (std::size_t i = 0; i + 1 < base.size(); ++i) path_edges.push_back(index.at({base[i], base[i + 1]}));
    w.vertices.push_back(base[0]);
    for (std::size_t t = 0; t < path_edges.size(); ++t) {
      const std::size_t e = path_edges[t];
      const auto& ex = lay.expansion[e];
      if (t < N) {
        // Snout edge t is matched with the t-th edge of the second half.
        const std::size_t r = lay.rank[path_edges[t + N]];
        w.vertices.insert(w.vertices.end(), {ex[r - 1], ex[3], ex[4], ex[4 + r]});
      } else {
        w.vertices.insert(w.vertices.end(), ex.begin(), ex.end());
      }
      w.vertices.push_back(base[t + 1]);
    }
  }
  w.half_len = (w.vertices.size() - 1) / 2;
  w.colors = path_colors(art.graph, *art.coloring, w.vertices);
  if (!validate_witness(art.graph, *art.coloring, w)) throw Error("internal error: constructed witness is invalid");
  return w;
}

}  // namespace thue

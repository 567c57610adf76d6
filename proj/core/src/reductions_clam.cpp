#include "thue/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "thue/solver.hpp"

namespace thue {

namespace {

constexpr std::size_t kClamPalette = 6;

ReductionArtifact build_clams(const Graph& g) {
  if (g.directed()) throw InvalidArgument("clam reduction requires an undirected graph");
  GraphBuilder b(false);
  b.add_vertices(g.vertex_count());
  ReductionArtifact art;
  art.kind = "clam";
  for (VertexId v = 0; v < g.vertex_count(); ++v) art.vertex_gadget.push_back("vertex" + std::to_string(v));
  nlohmann::json clams = nlohmann::json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [A, B] = g.edge(e);
    const std::string tag = "clam" + std::to_string(e);
    const VertexId first = b.add_vertices(kClamNewVertices);
    for (std::size_t i = 0; i < kClamNewVertices; ++i) art.vertex_gadget.push_back(tag);
    const VertexId s = first, t = first + 1, V = first + 2, W = first + 3;
    const auto first_edge = static_cast<EdgeId>(b.edge_count());
    const std::array<Edge, kClamEdges> edges{{{A, s},
                                              {s, B},
                                              {B, t},
                                              {t, A},
                                              {s, V},
                                              {V, t},
                                              {t, W},
                                              {W, s},
                                              {V, first + 4},
                                              {V, first + 5},
                                              {W, first + 6},
                                              {W, first + 7}}};
    for (const auto& ed : edges) {
      b.add_edge(ed.u, ed.v);
      art.edge_gadget.push_back(tag);
    }
    clams.push_back({{"a", A}, {"b", B}, {"first_vertex", first}, {"first_edge", first_edge}});
  }
  art.graph = b.build();
  art.palette_size = kClamPalette;
  art.max_half_len = 2;
  for (const char* name : {"a", "b", "c", "d", "e", "f"}) art.color_names.emplace_back(name);
  art.params = {{"source_vertices", g.vertex_count()}, {"source_edges", g.edge_count()}};
  art.extra["clams"] = std::move(clams);
  return art;
}

EdgeId clam_first_edge(const ReductionArtifact& art, std::size_t index) {
  return art.extra.at("clams").at(index).at("first_edge").get<EdgeId>();
}

std::array<Color, 2> pair_of(std::size_t p) {
  return {static_cast<Color>(2 * (p % 3)), static_cast<Color>(2 * (p % 3) + 1)};
}

}  // namespace

ReductionArtifact reduce_edgecoloring_clam(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) throw InvalidArgument("clam reduction requires a cubic graph");
  }
  return build_clams(g);
}

EdgeColoring clam_coloring_from_3ec(const ReductionArtifact& art, const Graph& g, const EdgeColoring& ec) {
  if (art.kind != "clam") throw InvalidArgument("not a clam artifact");
  if (!is_proper_edge_coloring(g, ec)) throw InvalidArgument("input is not a proper edge coloring");
  for (Color c : ec.colors()) {
    if (c < 0 || c > 2) throw InvalidArgument("input coloring must use colors 0..2");
  }
  std::vector<Color> colors(art.graph.edge_count(), EdgeColoring::kUnassigned);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto p = static_cast<std::size_t>(ec[e]);
    const auto o = pair_of(p), in = pair_of(p + 1), gl = pair_of(p + 2);
    const std::array<Color, kClamEdges> pattern{o[0],  o[1],  o[0],  o[1],  in[0], in[1],
                                                in[0], in[1], gl[0], gl[1], gl[0], gl[1]};
    const EdgeId first = clam_first_edge(art, e);
    for (std::size_t i = 0; i < kClamEdges; ++i) colors[first + i] = pattern[i];
  }
  return EdgeColoring(std::move(colors), kClamPalette);
}

ClamPattern read_clam_pattern(const ReductionArtifact& art, const EdgeColoring& c, std::size_t index) {
  const EdgeId first = clam_first_edge(art, index);
  auto part = [&](std::size_t from, std::size_t count, const char* what) {
    std::set<Color> used;
    for (std::size_t i = from; i < from + count; ++i) used.insert(c[first + static_cast<EdgeId>(i)]);
    if (used.size() != 2) {
      throw InvalidArgument("clam " + std::to_string(index) + " " + what + " uses " + std::to_string(used.size()) +
                            " colors");
    }
    return std::array<Color, 2>{*used.begin(), *used.rbegin()};
  };
  ClamPattern p{part(0, 4, "outer diamond"), part(4, 4, "inner diamond"), part(8, 2, "gills")};
  if (part(10, 2, "gills") != p.gills) throw InvalidArgument("gills of clam " + std::to_string(index) + " differ");
  return p;
}

ClamPatternEnumeration enumerate_clam_patterns() {
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const ReductionArtifact art = build_clams(star);
  GraphBuilder b(art.graph);
  for (VertexId v : {1u, 2u, 3u}) {
    for (int i = 0; i < 4; ++i) b.add_edge(v, b.add_vertex());
  }

  ThueQuery q;
  q.graph = b.build();
  q.palette_size = kClamPalette;
  q.max_half_len = 2;
  q.enumerate_all = true;
  q.symmetry = Symmetry{true, true};

  ClamPatternEnumeration out;
  std::set<ClamPattern> patterns;
  const auto result = enumerate_colorings(q, [&](const EdgeColoring& c) {
    ++out.solutions;
    std::array<ClamPattern, 3> raw;
    for (std::size_t i = 0; i < 3; ++i) raw[i] = read_clam_pattern(art, c, i);
    std::map<Color, Color> relabel;
    Color next = 0;
    for (const auto& pair : {raw[0].outer, raw[0].inner, raw[0].gills}) {
      for (Color x : pair) relabel[x] = next++;
    }
    auto map_pair = [&](std::array<Color, 2> p) {
      std::array<Color, 2> r{relabel.at(p[0]), relabel.at(p[1])};
      std::sort(r.begin(), r.end());
      return r;
    };
    for (const auto& p : raw) patterns.insert({map_pair(p.outer), map_pair(p.inner), map_pair(p.gills)});
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (raw[i].outer == raw[j].outer || raw[i].inner == raw[j].inner || raw[i].gills == raw[j].gills) {
          out.clams_at_vertex_disjoint = false;
        }
      }
    }
    return true;
  });
  if (result.status == Status::BudgetExceeded) throw Error("clam pattern enumeration did not complete");
  out.nodes = result.nodes;
  out.patterns.assign(patterns.begin(), patterns.end());
  return out;
}

Graph bridged_double_k4() {
  std::vector<Edge> edges;
  for (VertexId o : {0u, 5u}) {
    // K4 on o..o+3 with edge (o, o+1) subdivided by o+4.
    for (auto [u, v] : std::initializer_list<std::pair<VertexId, VertexId>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}}) {
      edges.push_back({o + u, o + v});
    }
  }
  edges.push_back({4, 9});
  return Graph(10, std::move(edges));
}

CliqueColoring group_clique_coloring(std::size_t m) {
  if (m < 1 || m > 7) throw InvalidArgument("group_clique_coloring supports 1 <= m <= 7");
  const std::uint32_t n = 1u << m;
  std::vector<Edge> edges;
  std::vector<Color> colors;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      edges.push_back({u, v});
      colors.push_back(static_cast<Color>((u ^ v) - 1));
    }
  }
  CliqueColoring out;
  out.m = m;
  out.graph = Graph(n, std::move(edges));
  out.coloring = EdgeColoring(std::move(colors), n - 1);
  return out;
}

}  // namespace thue

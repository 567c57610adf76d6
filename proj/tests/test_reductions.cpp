#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "thue/hypercube.hpp"
#include "thue/paths.hpp"
#include "thue/reductions.hpp"
#include "thue/solver.hpp"

using namespace thue;

namespace {

const CNFFormula kFig{3, {{1, 2, 3}, {-1, -2, -3}, {1, -2, -3}}};

std::size_t largest_color_class(const EdgeColoring& c) {
  std::map<Color, std::size_t> n;
  for (Color x : c.colors()) ++n[x];
  std::size_t best = 0;
  for (auto [k, v] : n) best = std::max(best, v);
  return best;
}

bool locally_proper(const Graph& g, const EdgeColoring& c) {
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

std::vector<CNFFormula> small_corpus() {
  const std::vector<Clause> pool = {{1}, {-1}, {1, 2}, {-1, -2}, {1, -2}, {-1, 2, 3}, {2, 3}, {-2, -3}, {1, 2, 3}};
  std::vector<CNFFormula> out;
  for (std::size_t a = 0; a < pool.size(); ++a) {
    for (std::size_t b = a; b < pool.size(); b += 2) out.push_back({3, {pool[a], pool[b]}});
  }
  out.push_back({1, {{1}, {-1}}});
  out.push_back(kFig);
  return out;
}

}  // namespace

TEST(Reduce3SatDirected, FigureFormulaStructure) {
  const auto art = reduce_3sat_directed(kFig);
  const auto& lay = *art.layout;
  EXPECT_EQ(lay.M, 2u);
  EXPECT_EQ(lay.branch_len, 3u);
  EXPECT_EQ(lay.snout_len, 16u);
  EXPECT_EQ(art.palette_size, 16u);
  EXPECT_EQ(art.graph.edge_count(), 53u);
  EXPECT_TRUE(art.graph.directed());
  for (VertexId v = 0; v < art.graph.vertex_count(); ++v) {
    EXPECT_LE(art.graph.in_degree(v), 3u);
    EXPECT_LE(art.graph.out_degree(v), 3u);
  }
  EXPECT_LE(largest_color_class(*art.coloring), 4u);
  // Snout edges carry 0..N-1 from the tip.
  for (std::size_t i = 0; i + 1 < lay.snout.size(); ++i) {
    EXPECT_EQ((*art.coloring)[*art.graph.find_edge(lay.snout[i], lay.snout[i + 1])], static_cast<Color>(i));
  }
  std::set<VertexId> detour;
  for (const auto& d : lay.detour) {
    for (VertexId v : d) EXPECT_TRUE(detour.insert(v).second);
  }
  EXPECT_EQ(art.vertex_gadget.size(), art.graph.vertex_count());
  EXPECT_EQ(art.edge_gadget.size(), art.graph.edge_count());
}

TEST(Reduce3SatDirected, Witness) {
  const auto art = reduce_3sat_directed(kFig);
  const auto w = witness_square_path(art, kFig, {true, false, false});
  EXPECT_TRUE(validate_witness(art.graph, *art.coloring, w));
  EXPECT_EQ(w.vertices.size(), 2 * w.half_len + 1);
  EXPECT_EQ(w.half_len, art.layout->snout_len);
  EXPECT_THROW(witness_square_path(art, kFig, {false, true, true}), InvalidArgument);
  EXPECT_TRUE(find_square_path(art.graph, *art.coloring));
}

TEST(Reduce3SatUndirected, FigureFormulaStructure) {
  const auto art = reduce_3sat_undirected(kFig);
  const std::size_t N = art.layout->snout_len;
  EXPECT_FALSE(art.graph.directed());
  EXPECT_EQ(art.palette_size, 13 * N);
  EXPECT_EQ(art.graph.edge_count(), 393u);
  EXPECT_TRUE(locally_proper(art.graph, *art.coloring));
  EXPECT_LE(largest_color_class(*art.coloring), 4u);
  std::map<Color, std::size_t> dd;
  for (Color c : art.coloring->colors()) {
    if (static_cast<std::size_t>(c) >= N) ++dd[c];
  }
  for (auto [c, n] : dd) EXPECT_LE(n, 2u) << c;
  EXPECT_EQ(art.graph.max_degree(), 6u);
  const auto w = witness_square_path(art, kFig, {true, false, false});
  EXPECT_TRUE(validate_witness(art.graph, *art.coloring, w));
}

TEST(Reduce3Sat, ContradictionHasNoSquare) {
  const CNFFormula f{1, {{1}, {-1}}};
  EXPECT_FALSE(find_square_path(reduce_3sat_directed(f).graph, *reduce_3sat_directed(f).coloring));
  const auto u = reduce_3sat_undirected(f);
  EXPECT_FALSE(find_square_path(u.graph, *u.coloring));
  EXPECT_FALSE(sat_bruteforce(f));
}

TEST(Reduce3Sat, SmallCorpusEquivalence) {
  for (const auto& f : small_corpus()) {
    const bool sat = oracle::satisfiable(f);
    for (const auto& art : {reduce_3sat_directed(f), reduce_3sat_undirected(f)}) {
      EXPECT_EQ(find_square_path(art.graph, *art.coloring).has_value(), sat) << art.kind << " " << to_dimacs(f);
      EXPECT_LE(largest_color_class(*art.coloring), 4u);
      if (sat) {
        const auto w = witness_square_path(art, f, *sat_bruteforce(f));
        EXPECT_TRUE(validate_witness(art.graph, *art.coloring, w));
      }
    }
  }
}

TEST(Reduce3Sat, ShortClausesAndBadInput) {
  const CNFFormula f{2, {{1}, {1, 2}}};
  const auto art = reduce_3sat_directed(f);
  EXPECT_TRUE(find_square_path(art.graph, *art.coloring));
  EXPECT_THROW(reduce_3sat_directed(CNFFormula{2, {{1, 2, -1, 2}}}), InvalidArgument);
  EXPECT_THROW(reduce_3sat_directed(CNFFormula{1, {{2}}}), InvalidArgument);
}

TEST(ReduceQbfRestricted, Constraints) {
  const QBFInstance q{{1}, {2}, {2, {{1, 2}, {-1, -2}}}};
  const auto art = reduce_qbf_restricted(q);
  ASSERT_TRUE(art.constraints);
  std::size_t doubles = 0;
  for (EdgeId e = 0; e < art.graph.edge_count(); ++e) {
    const auto n = art.constraints->allowed(e).size();
    EXPECT_LE(n, 2u);
    doubles += n == 2;
  }
  EXPECT_EQ(doubles, q.universal.size());
  EXPECT_FALSE(art.coloring);
  EXPECT_FALSE(restricted_colorable(art));
  for (std::uint64_t bits : {0u, 1u}) {
    const auto c = resolve_choices(art, bits);
    for (EdgeId e = 0; e < art.graph.edge_count(); ++e) EXPECT_TRUE(art.constraints->permits(e, c[e]));
  }
}

TEST(ReduceQbfRestricted, MatchesForallExists) {
  const std::vector<QBFInstance> cases = {
      {{1}, {2}, {2, {{1, 2}, {-1, -2}}}},
      {{1}, {2}, {2, {{1, 2}}}},
      {{1}, {2}, {2, {{1}, {2}}}},
      {{1}, {2}, {2, {{-1, 2}, {1, -2}, {-2}}}},
      {{2}, {1}, {2, {{1}, {-2, 1}}}},
  };
  for (const auto& q : cases) {
    const auto art = reduce_qbf_restricted(q);
    std::optional<std::uint64_t> cert;
    const bool colorable = restricted_colorable(art, &cert);
    EXPECT_EQ(colorable, !oracle::forall_exists(q)) << to_qdimacs(q);
    if (colorable) {
      ASSERT_TRUE(cert);
      EXPECT_FALSE(find_square_path(art.graph, resolve_choices(art, *cert)));
    }
  }
}

TEST(Clam, Structure) {
  const Graph k4 = fixture::complete(4);
  const auto art = reduce_edgecoloring_clam(k4);
  EXPECT_EQ(art.graph.vertex_count(), 4 + kClamNewVertices * 6);
  EXPECT_EQ(art.graph.edge_count(), kClamEdges * 6);
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(art.graph.degree(v), 6u);
  EXPECT_EQ(art.graph.max_degree(), 6u);
  EXPECT_EQ(art.palette_size, 6u);
  EXPECT_EQ(art.max_half_len, 2u);
  EXPECT_THROW(reduce_edgecoloring_clam(fixture::cycle(4)), InvalidArgument);
}

TEST(Clam, TransportedColoringsAreTwoNonrepetitive) {
  for (const Graph& g : {fixture::complete(4), fixture::k33()}) {
    const auto art = reduce_edgecoloring_clam(g);
    const auto ec = three_edge_colorable(g);
    ASSERT_TRUE(ec);
    const auto c = clam_coloring_from_3ec(art, g, *ec);
    EXPECT_TRUE(is_nonrepetitive(art.graph, c, {2}).nonrepetitive);
    const auto colors = c.colors();
    EXPECT_FALSE(oracle::has_square_path(art.graph, {colors.begin(), colors.end()}, 2));
    std::set<ClamPattern> used;
    for (std::size_t i = 0; i < g.edge_count(); ++i) used.insert(read_clam_pattern(art, c, i));
    EXPECT_EQ(used.size(), 3u);
  }
  const Graph k4 = fixture::complete(4);
  EXPECT_THROW(clam_coloring_from_3ec(reduce_edgecoloring_clam(k4), k4, EdgeColoring(std::vector<Color>(6, 0))),
               InvalidArgument);
}

TEST(Clam, PatternForcing) {
  const auto r = enumerate_clam_patterns();
  ASSERT_EQ(r.patterns.size(), 3u);
  EXPECT_TRUE(r.clams_at_vertex_disjoint);
  std::set<Color> all;
  for (const auto& p : r.patterns) {
    EXPECT_NE(p.outer[0], p.outer[1]);
    EXPECT_NE(p.inner[0], p.inner[1]);
    std::set<Color> six{p.outer[0], p.outer[1], p.inner[0], p.inner[1], p.gills[0], p.gills[1]};
    EXPECT_EQ(six.size(), 6u);
    all.insert(p.outer.begin(), p.outer.end());
  }
  // The three patterns rotate the same three color pairs.
  EXPECT_EQ(all.size(), 6u);
}

TEST(Clam, BridgedGraphInstanceIsUnsat) {
  const Graph g = bridged_double_k4();
  ASSERT_FALSE(three_edge_colorable(g));
  const auto art = reduce_edgecoloring_clam(g);
  ThueQuery q;
  q.graph = art.graph;
  q.palette_size = 6;
  q.max_half_len = 2;
  q.budget = 100'000'000;
  EXPECT_EQ(decide_thue(q).status, Status::Unsat);
}

TEST(GroupClique, Colorings) {
  const auto c1 = group_clique_coloring(1);
  EXPECT_EQ(c1.graph.edge_count(), 1u);
  EXPECT_EQ(c1.coloring.distinct_colors().size(), 1u);
  const auto c2 = group_clique_coloring(2);
  EXPECT_EQ(c2.graph.edge_count(), 6u);
  EXPECT_TRUE(is_proper_edge_coloring(c2.graph, c2.coloring));
  EXPECT_EQ(c2.coloring.distinct_colors().size(), 3u);
  const auto c3 = group_clique_coloring(3);
  EXPECT_EQ(c3.graph.vertex_count(), 8u);
  EXPECT_EQ(c3.coloring.distinct_colors().size(), 7u);
  EXPECT_TRUE(is_nonrepetitive(c3.graph, c3.coloring).nonrepetitive);
  for (EdgeId e = 0; e < c3.graph.edge_count(); ++e) {
    const auto [u, v] = c3.graph.edge(e);
    EXPECT_EQ(c3.coloring[e], static_cast<Color>((u ^ v) - 1));
  }
  EXPECT_THROW(group_clique_coloring(0), InvalidArgument);
  EXPECT_THROW(group_clique_coloring(8), InvalidArgument);
}

TEST(QbfThue, Parameters) {
  const QBFInstance q{{1}, {2}, {2, {{1, 2}, {-1, -2}}}};
  const auto inst = reduce_qbf_thue(q);
  const auto restricted = reduce_qbf_restricted(q);
  EXPECT_EQ(inst.c, restricted.constraints->palette().size());
  EXPECT_EQ(inst.u, 1u);
  EXPECT_GE(std::uint64_t{1} << inst.ell, inst.c + inst.u + 1);
  EXPECT_LT(std::uint64_t{1} << (inst.ell - 1), inst.c + inst.u + 1);
  EXPECT_EQ(inst.m, 4 * inst.ell + 3);
  EXPECT_EQ(inst.clique_exponent, inst.m);
  EXPECT_EQ(inst.palette_size(), (std::uint64_t{1} << inst.m) + 6);
  for (VertexId v = 0; v < inst.core.vertex_count(); ++v) ASSERT_LE(inst.degree(v), inst.palette_size());
}

TEST(QbfThue, Gadgets) {
  const QBFInstance q{{1}, {2}, {2, {{1, 2}, {-1, -2}}}};
  const auto inst = reduce_qbf_thue(q);
  std::map<char, std::size_t> kinds;
  for (std::size_t i = 0; i < inst.gadgets.size(); ++i) {
    const auto& g = inst.gadgets[i];
    ++kinds[g.kind];
    if (g.kind != 'E' && g.kind != 'P') continue;
    const Graph local = inst.gadget_graph(i);
    EXPECT_EQ(bfs_distance(local, 0, 1), 7u);
    EXPECT_EQ(bfs_distance(local, 0, 2 + g.attach[0] - g.first_vertex), 3u);
    EXPECT_EQ(bfs_distance(local, 0, 2 + g.attach[1] - g.first_vertex), 4u);
    if (g.kind == 'E') {
      EXPECT_EQ(local.vertex_count(), 128u);
      EXPECT_EQ(local.edge_count(), 448u);
    } else {
      EXPECT_EQ(local.edge_count(), 448u - 8u);
      EXPECT_EQ(local.degree(1), 3u);
      for (VertexId v : g.near_saturated) EXPECT_EQ(inst.degree(v), inst.palette_size() - 3);
    }
  }
  EXPECT_EQ(kinds['C'], q.universal.size());
  EXPECT_EQ(kinds['N'], q.universal.size());
  EXPECT_EQ(kinds['P'], q.universal.size());
  EXPECT_EQ(inst.gadgets.size(), inst.split.edge_count());
  std::set<Color> singles;
  for (const auto& g : inst.gadgets) {
    if (g.kind == 'E') singles.insert(g.color);
  }
  EXPECT_EQ(inst.consistency.size(), singles.size() + q.universal.size());
  for (const auto& c : inst.consistency) {
    for (VertexId v : c.members) EXPECT_EQ(inst.degree(v), inst.palette_size()) << c.tag;
  }
}

TEST(QbfThue, MaterializedCountsAndSaturation) {
  const QBFInstance q{{1}, {2}, {2, {{1, 2}, {-1, -2}}}};
  ThueOptions o;
  o.clique_exponent = 6;
  const auto inst = reduce_qbf_thue(q, o);
  EXPECT_EQ(inst.palette_size(), 70u);
  const auto mat = inst.materialize(2'000'000);
  EXPECT_EQ(std::to_string(mat.graph.vertex_count()), inst.total_vertices());
  EXPECT_EQ(std::to_string(mat.graph.edge_count()), inst.total_edges());
  EXPECT_EQ(mat.graph.max_degree(), inst.palette_size());
  for (VertexId v = 0; v < inst.core.vertex_count(); ++v) ASSERT_EQ(mat.graph.degree(v), inst.degree(v));
  ASSERT_EQ(mat.cliques.size(), inst.consistency.size());
  for (const auto& clique : mat.cliques) {
    ASSERT_EQ(clique.size(), 64u);
    for (std::size_t i = 0; i < clique.size(); ++i) {
      EXPECT_EQ(mat.graph.degree(clique[i]), inst.palette_size());
      for (std::size_t j = i + 1; j < clique.size(); ++j) ASSERT_TRUE(mat.graph.find_edge(clique[i], clique[j]));
    }
  }
  EXPECT_THROW(inst.materialize(1000), InvalidArgument);
  o.clique_exponent = 4;
  EXPECT_THROW(reduce_qbf_thue(q, o), InvalidArgument);
  ThueOptions tiny;
  tiny.core_vertex_limit = 100;
  EXPECT_THROW(reduce_qbf_thue(q, tiny), InvalidArgument);
}

TEST(QbfThue, Deterministic) {
  const QBFInstance q{{1}, {2}, {2, {{1, 2}, {-1, -2}}}};
  EXPECT_EQ(artifact_to_json(thue_instance_artifact(reduce_qbf_thue(q))).dump(),
            artifact_to_json(thue_instance_artifact(reduce_qbf_thue(q))).dump());
}

TEST(Artifacts, JsonRoundTrip) {
  const QBFInstance q{{1}, {2}, {2, {{1, 2}, {-1, -2}}}};
  std::vector<ReductionArtifact> arts = {reduce_3sat_directed(kFig), reduce_3sat_undirected(kFig),
                                         reduce_qbf_restricted(q), reduce_edgecoloring_clam(fixture::k33()),
                                         thue_instance_artifact(reduce_qbf_thue(q))};
  for (const auto& art : arts) {
    const auto j = artifact_to_json(art);
    const auto back = artifact_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_TRUE(back == art) << art.kind;
    EXPECT_EQ(artifact_to_json(back), j);
  }
  EXPECT_THROW(artifact_from_json(nlohmann::json::parse(R"({"kind":"x"})")), ParseError);
}

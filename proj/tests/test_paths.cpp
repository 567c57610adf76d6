#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "thue/hypercube.hpp"
#include "thue/paths.hpp"

using namespace thue;

namespace {

EdgeColoring colored(std::vector<Color> c) { return EdgeColoring(std::move(c)); }

Graph random_graph(std::mt19937& rng, bool directed, std::size_t max_edges) {
  std::uniform_int_distribution<std::size_t> nv(2, 7);
  const std::size_t n = nv(rng);
  std::vector<Edge> all;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v && (directed || u < v)) all.push_back({u, v});
    }
  }
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<Edge> picked;
  for (const Edge& e : all) {
    if (picked.size() == max_edges) break;
    if (directed && std::find(picked.begin(), picked.end(), Edge{e.v, e.u}) != picked.end()) continue;
    picked.push_back(e);
  }
  picked.resize(std::uniform_int_distribution<std::size_t>(1, picked.size())(rng));
  return Graph(n, picked, directed);
}

}  // namespace

TEST(Paths, Examples) {
  auto w = find_square_path(fixture::path(2), colored({5, 5}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->half_len, 1u);
  EXPECT_EQ(w->colors, (ColorWord{5, 5}));
  EXPECT_FALSE(find_square_path(fixture::cycle(4), colored({0, 1, 0, 1})));
  EXPECT_FALSE(find_square_path(fixture::cycle(3), colored({0, 1, 2})));
  const auto q3 = build_hypercube(3);
  EXPECT_TRUE(is_nonrepetitive(q3.graph, q3.coloring).nonrepetitive);
  EXPECT_FALSE(is_nonrepetitive(fixture::star(2), colored({3, 3})).nonrepetitive);
  EXPECT_TRUE(is_nonrepetitive(Graph(2, {{0, 1}}), colored({0})).nonrepetitive);
}

TEST(Paths, OpenPathCounts) {
  EXPECT_EQ(enumerate_open_paths(Graph(2, {{0, 1}})).size(), 1u);
  EXPECT_EQ(enumerate_open_paths(fixture::path(2)).size(), 3u);
  // 4 single edges, 4 two-edge and 4 three-edge paths.
  EXPECT_EQ(enumerate_open_paths(fixture::cycle(4)).size(), 12u);
  EXPECT_EQ(oracle::count_open_paths(fixture::cycle(4)), 12u);
  EXPECT_EQ(enumerate_open_paths(fixture::cycle(4), 2).size(), 8u);
  EXPECT_EQ(enumerate_open_paths(fixture::complete(5)).size(), oracle::count_open_paths(fixture::complete(5)));
  const Graph d(3, {{0, 1}, {1, 2}, {2, 0}}, true);
  EXPECT_EQ(enumerate_open_paths(d).size(), 6u);
}

TEST(Paths, LongerSquares) {
  // 0-1-2-3-4 colored abab: a square of half length 2.
  const auto w = find_square_path(fixture::path(4), colored({0, 1, 0, 1}));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->half_len, 2u);
  EXPECT_FALSE(find_square_path(fixture::path(4), colored({0, 1, 0, 1}), {1}));
  // The square lies in the middle of a longer path.
  const auto p = fixture::path(7);
  const auto c = colored({0, 1, 2, 0, 1, 2, 0});
  const auto found = find_square_path(p, c);
  ASSERT_TRUE(found);
  EXPECT_TRUE(validate_witness(p, c, *found));
  EXPECT_EQ(found->half_len, 3u);
}

TEST(Paths, DirectedRespectsOrientation) {
  // a->b->c colored 0,0 is a square; a->b<-c is not a path.
  EXPECT_TRUE(find_square_path(Graph(3, {{0, 1}, {1, 2}}, true), colored({0, 0})));
  EXPECT_FALSE(find_square_path(Graph(3, {{0, 1}, {2, 1}}, true), colored({0, 0})));
  EXPECT_FALSE(find_square_path(Graph(5, {{0, 1}, {1, 2}, {3, 2}, {3, 4}}, true), colored({0, 1, 0, 1})));
  EXPECT_TRUE(find_square_path(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, true), colored({0, 1, 0, 1})));
}

TEST(Paths, WitnessValidation) {
  const auto g = fixture::path(2);
  const auto c = colored({4, 4});
  SquareWitness w{{0, 1, 2}, {4, 4}, 1};
  EXPECT_TRUE(validate_witness(g, c, w));
  EXPECT_FALSE(validate_witness(g, c, SquareWitness{{0, 1, 0}, {4, 4}, 1}));
  EXPECT_FALSE(validate_witness(g, c, SquareWitness{{0, 2, 1}, {4, 4}, 1}));
  EXPECT_FALSE(validate_witness(g, colored({4, 3}), w));
  EXPECT_EQ(witness_from_json(witness_to_json(w)), w);
  EXPECT_THROW(witness_from_json(nlohmann::json::parse(R"({"vertices":[0]})")), ParseError);
}

TEST(Paths, RejectsPartialColorings) {
  EXPECT_THROW(find_square_path(fixture::path(2), EdgeColoring(2)), InvalidArgument);
  EXPECT_THROW(find_square_path(fixture::path(2), colored({0})), InvalidArgument);
}

TEST(Paths, AgreesWithBruteForce) {
  std::mt19937 rng(2024);
  for (int t = 0; t < 400; ++t) {
    const bool directed = t % 3 == 0;
    const Graph g = random_graph(rng, directed, 8);
    std::vector<Color> c(g.edge_count());
    for (auto& x : c) x = std::uniform_int_distribution<Color>(0, 2)(rng);
    for (std::optional<std::size_t> bound : {std::optional<std::size_t>{}, std::optional<std::size_t>{1},
                                            std::optional<std::size_t>{2}}) {
      const auto w = find_square_path(g, colored(c), {bound});
      ASSERT_EQ(w.has_value(), oracle::has_square_path(g, c, bound)) << t;
      if (w) {
        EXPECT_TRUE(validate_witness(g, colored(c), *w));
        if (bound) EXPECT_LE(w->half_len, *bound);
      }
    }
  }
}

TEST(Paths, WorkersDoNotChangeTheWitness) {
  std::mt19937 rng(5);
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_graph(rng, false, 10);
    std::vector<Color> c(g.edge_count());
    for (auto& x : c) x = std::uniform_int_distribution<Color>(0, 3)(rng);
    EXPECT_EQ(find_square_path(g, colored(c), {std::nullopt, 1}), find_square_path(g, colored(c), {std::nullopt, 3}));
  }
}

TEST(Paths, SearcherThroughEdge) {
  const auto g = fixture::path(3);
  std::vector<Color> c{0, 1, EdgeColoring::kUnassigned};
  SquareSearcher s(g, c, std::nullopt);
  EXPECT_FALSE(s.has_square_through(1));
  s.assign(2, 1);
  EXPECT_TRUE(s.has_square_through(2));
  s.assign(2, 2);
  EXPECT_FALSE(s.has_square_through(2));
  EXPECT_GT(s.steps(), 0u);
}

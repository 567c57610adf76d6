#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "thue/oracle.hpp"
#include "thue/reductions.hpp"

using namespace thue;

namespace {

CNFFormula cnf(std::size_t n, std::vector<Clause> c) { return {n, std::move(c)}; }

}  // namespace

TEST(Oracle, SatExamples) {
  EXPECT_EQ(sat_bruteforce(cnf(1, {{1}})), (Assignment{true}));
  EXPECT_FALSE(sat_bruteforce(cnf(1, {{1}, {-1}})));
  const auto fig = cnf(3, {{1, 2, 3}, {-1, -2, -3}, {1, -2, -3}});
  const auto a = sat_bruteforce(fig);
  ASSERT_TRUE(a);
  EXPECT_TRUE(evaluate(fig, *a));
  // Search order counts up with x1 most significant, false before true.
  EXPECT_EQ(*a, (Assignment{false, false, true}));
  EXPECT_TRUE(evaluate(fig, {true, false, false}));
}

TEST(Oracle, SatAgreesWithOracle) {
  std::mt19937 rng(3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 5;
    CNFFormula f{n, {}};
    for (std::size_t j = 0, m = 1 + rng() % 8; j < m; ++j) {
      Clause c;
      for (std::size_t l = 0, s = 1 + rng() % 3; l < s; ++l) {
        const int v = 1 + static_cast<int>(rng() % n);
        c.push_back(rng() % 2 ? v : -v);
      }
      f.clauses.push_back(c);
    }
    const auto a = sat_bruteforce(f);
    EXPECT_EQ(a.has_value(), oracle::satisfiable(f));
    if (a) EXPECT_TRUE(evaluate(f, *a));
  }
}

TEST(Oracle, ForallExists) {
  EXPECT_TRUE(forall_exists({{}, {1}, cnf(1, {{1}})}));
  EXPECT_FALSE(forall_exists({{1}, {}, cnf(1, {{1}})}));
  const QBFInstance xor_like{{1}, {2}, cnf(2, {{1, 2}, {-1, -2}})};
  EXPECT_TRUE(forall_exists(xor_like));
  EXPECT_FALSE(forall_exists({{1}, {2}, cnf(2, {{1}, {2}})}));
  std::mt19937 rng(8);
  for (int t = 0; t < 200; ++t) {
    QBFInstance q{{1}, {2, 3}, cnf(3, {})};
    for (int j = 0; j < 1 + static_cast<int>(rng() % 5); ++j) {
      Clause c;
      for (int l = 0; l < 1 + static_cast<int>(rng() % 3); ++l) {
        const int v = 1 + static_cast<int>(rng() % 3);
        c.push_back(rng() % 2 ? v : -v);
      }
      q.matrix.clauses.push_back(c);
    }
    EXPECT_EQ(forall_exists(q), oracle::forall_exists(q));
  }
}

TEST(Oracle, Validation) {
  EXPECT_THROW(validate(cnf(1, {{2}})), InvalidArgument);
  EXPECT_THROW(validate(cnf(1, {{0}})), InvalidArgument);
  EXPECT_THROW(validate(QBFInstance{{1}, {1}, cnf(1, {{1}})}), InvalidArgument);
  EXPECT_THROW(validate(QBFInstance{{1}, {}, cnf(2, {{2}})}), InvalidArgument);
  EXPECT_THROW(sat_bruteforce(cnf(26, {{1}})), InvalidArgument);
}

TEST(Oracle, MaxLiteralOccurrence) {
  EXPECT_EQ(max_literal_occurrence(cnf(3, {{1, 2, 3}, {-1, -2, -3}, {1, -2, -3}})), 2u);
  EXPECT_EQ(max_literal_occurrence(cnf(2, {{1}, {1, 2}, {1, -2}})), 3u);
}

TEST(Oracle, ThreeEdgeColorable) {
  const auto k4 = three_edge_colorable(fixture::complete(4));
  ASSERT_TRUE(k4);
  EXPECT_TRUE(is_proper_edge_coloring(fixture::complete(4), *k4));
  EXPECT_EQ(k4->distinct_colors().size(), 3u);
  const auto k33 = three_edge_colorable(fixture::k33());
  ASSERT_TRUE(k33);
  EXPECT_TRUE(is_proper_edge_coloring(fixture::k33(), *k33));
  EXPECT_FALSE(three_edge_colorable(bridged_double_k4()));
  // Petersen graph is class 2.
  std::vector<Edge> pet;
  for (VertexId i = 0; i < 5; ++i) {
    pet.push_back({i, static_cast<VertexId>((i + 1) % 5)});
    pet.push_back({i, static_cast<VertexId>(i + 5)});
    pet.push_back({static_cast<VertexId>(i + 5), static_cast<VertexId>((i + 2) % 5 + 5)});
  }
  EXPECT_FALSE(three_edge_colorable(Graph(10, pet)));
  EXPECT_THROW(three_edge_colorable(fixture::cycle(4)), InvalidArgument);
  EXPECT_FALSE(is_proper_edge_coloring(fixture::path(2), EdgeColoring(std::vector<Color>{1, 1})));
}

TEST(Oracle, BridgedGraphIsClassTwoByBruteForce) {
  const Graph g = bridged_double_k4();
  ASSERT_EQ(g.vertex_count(), 10u);
  for (VertexId v = 0; v < 10; ++v) ASSERT_EQ(g.degree(v), 3u);
  bool any = false;
  oracle::all_colorings(g.edge_count(), 3, [&](const std::vector<Color>& c) {
    if (!any) any = is_proper_edge_coloring(g, EdgeColoring(c));
  });
  EXPECT_FALSE(any);
}

TEST(Oracle, Dimacs) {
  EXPECT_EQ(parse_dimacs("p cnf 1 1\n1 0\n"), cnf(1, {{1}}));
  EXPECT_EQ(parse_dimacs("c comment\np cnf 2 2\n1 2 0\n-1 -2 0\n").clauses.size(), 2u);
  // Clauses may span lines.
  EXPECT_EQ(parse_dimacs("p cnf 3 1\n1 2\n3 0\n"), cnf(3, {{1, 2, 3}}));
  const auto q = parse_qdimacs("p cnf 2 2\na 1 0\ne 2 0\n1 2 0\n-1 -2 0\n");
  EXPECT_EQ(q.universal, std::vector<int>{1});
  EXPECT_EQ(q.existential, std::vector<int>{2});
  EXPECT_EQ(parse_qdimacs(to_qdimacs(q)), q);
  const auto f = cnf(3, {{1, -2}, {3}});
  EXPECT_EQ(parse_dimacs(to_dimacs(f)), f);
}

TEST(Oracle, DimacsErrors) {
  EXPECT_THROW(parse_dimacs("1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 1 2\n1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 1 1\n2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 1 1\nx 0\n"), ParseError);
  EXPECT_THROW(parse_qdimacs("p cnf 2 1\ne 2 0\na 1 0\n1 2 0\n"), ParseError);
  EXPECT_THROW(parse_qdimacs("p cnf 2 1\na 1 0\n1 2 0\n"), ParseError);
  try {
    parse_dimacs("p cnf 2 1\n1 2 0\n1 zz 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

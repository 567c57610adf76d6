#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "thue/io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = thue::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = (std::filesystem::temp_directory_path() / ("thue_cli_" + name)).string();
  thue::write_file(path, text);
  return path;
}

}  // namespace

TEST(Cli, CheckFourCycle) {
  const auto f = temp_file("c4.json", R"({"n":4,"edges":[[0,1],[1,2],[2,3],[3,0]],"coloring":{"0":0,"1":1,"2":0,"3":1}})");
  const auto r = cli({"check", f});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "nonrepetitive\n");
  const auto j = cli({"check", f, "--json"});
  EXPECT_TRUE(nlohmann::json::parse(j.out)["nonrepetitive"].get<bool>());
}

TEST(Cli, CheckFindsSquare) {
  const auto f = temp_file("p2.json", R"({"n":3,"edges":[[0,1],[1,2]],"coloring":{"0":4,"1":4}})");
  const auto r = cli({"check", f, "--json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(nlohmann::json::parse(r.out)["witness"]["half_len"], 1);
}

TEST(Cli, Solve) {
  const auto f = temp_file("p4.json", R"({"n":5,"edges":[[0,1],[1,2],[2,3],[3,4]]})");
  EXPECT_EQ(cli({"solve", f, "--k", "2"}).code, 1);
  const auto sat = cli({"solve", f, "--k", "3", "--json"});
  EXPECT_EQ(sat.code, 0);
  EXPECT_EQ(nlohmann::json::parse(sat.out)["status"], "sat");
  EXPECT_EQ(cli({"solve", f, "--minimize"}).out.find("thue number 3"), 4u);
  const auto all = cli({"solve", f, "--k", "3", "--enumerate", "--json"});
  EXPECT_EQ(all.code, 0);
  EXPECT_GT(nlohmann::json::parse(all.out)["count"].get<int>(), 1);
}

TEST(Cli, SolveBudgetRules) {
  std::string edges;
  for (int i = 0; i < 25; ++i) edges += (i ? "," : "") + std::string("[") + std::to_string(i) + "," + std::to_string(i + 1) + "]";
  const auto f = temp_file("p25.json", R"({"n":26,"edges":[)" + edges + "]}");
  EXPECT_EQ(cli({"solve", f, "--k", "3"}).code, 10);
  EXPECT_EQ(cli({"solve", f, "--k", "3", "--budget", "1000000"}).code, 0);
  EXPECT_EQ(cli({"solve", f, "--k", "3", "--budget", "5"}).code, 2);
}

TEST(Cli, Word) {
  const auto r = cli({"word", "--check", "012012"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "square at (0,3)\n");
  EXPECT_EQ(cli({"word", "check", "0102010"}).code, 0);
  EXPECT_EQ(cli({"word", "gen", "6"}).out, "012021\n");
  EXPECT_EQ(cli({"word", "--gen", "6"}).out, "012021\n");
  EXPECT_EQ(cli({"word"}).code, 10);
}

TEST(Cli, Hypercube) {
  const auto r = cli({"hypercube", "verify", "--k", "3", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["all_hold"].get<bool>());
  const auto b = cli({"hypercube", "build", "--k", "2"});
  EXPECT_EQ(nlohmann::json::parse(b.out)["edges"].size(), 4u);
  EXPECT_EQ(cli({"hypercube", "verify", "--k", "12"}).code, 10);
}

TEST(Cli, ReduceAndVerify) {
  const auto cnf = temp_file("fig.cnf", "p cnf 3 3\n1 2 3 0\n-1 -2 -3 0\n1 -2 -3 0\n");
  const auto out = (std::filesystem::temp_directory_path() / "thue_cli_art.json").string();
  const auto dot = (std::filesystem::temp_directory_path() / "thue_cli_art.dot").string();
  EXPECT_EQ(cli({"reduce", "--from", "3sat-dir", cnf, "-o", out, "--dot", dot}).code, 0);
  const auto art = nlohmann::json::parse(thue::read_file(out));
  EXPECT_EQ(art["kind"], "3sat-directed");
  EXPECT_NE(thue::read_file(dot).find("digraph"), std::string::npos);
  EXPECT_NE(cli({"export-dot", out}).out.find("cluster"), std::string::npos);
  for (const char* from : {"3sat-dir", "3sat-undir"}) {
    const auto v = cli({"verify-reduction", "--from", from, cnf});
    EXPECT_EQ(v.code, 0) << v.out << v.err;
    EXPECT_TRUE(nlohmann::json::parse(v.out)["witness_valid"].get<bool>());
  }
  const auto qd = temp_file("q.qdimacs", "p cnf 2 2\na 1 0\ne 2 0\n1 2 0\n-1 -2 0\n");
  EXPECT_EQ(cli({"verify-reduction", "--from", "qbf-restricted", qd}).code, 0);
  const auto t = cli({"verify-reduction", "--from", "qbf-thue", qd});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(nlohmann::json::parse(t.out)["m"], 31);
  const auto k4 = temp_file("k4.json", R"({"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");
  EXPECT_EQ(cli({"verify-reduction", "--from", "clam", k4}).code, 0);
  EXPECT_EQ(cli({"reduce", "--from", "qbf-thue", qd, "--clique-exponent", "6"}).code, 0);
}

TEST(Cli, Errors) {
  EXPECT_EQ(cli({}).code, 10);
  EXPECT_EQ(cli({"frobnicate"}).code, 10);
  EXPECT_EQ(cli({"reduce", "--from", "nope", "x"}).code, 10);
  const auto bad = temp_file("bad.cnf", "p cnf 1 1\n1 2 0\n");
  const auto r = cli({"reduce", "--from", "3sat-dir", bad});
  EXPECT_EQ(r.code, 11);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(cli({"check", "/nonexistent/file.json"}).code, 12);
  const auto uncolored = temp_file("nc.json", R"({"n":2,"edges":[[0,1]]})");
  EXPECT_EQ(cli({"check", uncolored}).code, 10);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
  const auto cnf = temp_file("d.cnf", "p cnf 2 2\n1 2 0\n-1 0\n");
  EXPECT_EQ(cli({"reduce", "--from", "3sat-undir", cnf}).out, cli({"reduce", "--from", "3sat-undir", cnf}).out);
}

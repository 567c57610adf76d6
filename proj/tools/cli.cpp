#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "thue/graph.hpp"
#include "thue/hypercube.hpp"
#include "thue/io.hpp"
#include "thue/oracle.hpp"
#include "thue/paths.hpp"
#include "thue/reductions.hpp"
#include "thue/solver.hpp"
#include "thue/word.hpp"

namespace thue::cli {

namespace {

using nlohmann::json;

// Graphs with more edges than this need an explicit --budget for `solve`.
constexpr std::size_t kUnbudgetedEdgeLimit = 24;
constexpr std::uint64_t kDefaultVerifyBudget = 100'000'000;

struct Io {
  std::ostream& out;
  std::ostream& err;
  std::string output;  // empty: out
  std::string dot;     // empty: no DOT file
  bool as_json = false;

  void emit_text(const std::string& text) const {
    if (output.empty() || output == "-") {
      out << text;
    } else {
      write_file(output, text);
    }
  }
  void emit(const json& j) const { emit_text(j.dump(2) + "\n"); }
  void emit_dot(const std::string& text) const {
    if (!dot.empty()) write_file(dot, text);
  }
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  return read_file(path);
}

std::string join(const std::vector<VertexId>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
  return s.str();
}

std::string word_text(std::span<const Color> w) {
  std::string s;
  for (Color c : w) s += c < 10 ? std::string(1, static_cast<char>('0' + c)) : "(" + std::to_string(c) + ")";
  return s;
}

ColorWord word_from_text(const std::string& text) {
  ColorWord w;
  for (unsigned char ch : text) w.push_back(ch >= '0' && ch <= '9' ? ch - '0' : ch);
  return w;
}

// --- check ------------------------------------------------------------------

struct CheckArgs {
  std::string input;
  std::optional<std::size_t> bound;
  unsigned workers = 1;
};

int do_check(const CheckArgs& a, const Io& io) {
  const GraphDocument doc = parse_graph(read_input(a.input));
  if (!doc.coloring || !doc.coloring->is_total()) throw InvalidArgument("check needs a coloring of every edge");
  const auto report = is_nonrepetitive(doc.graph, *doc.coloring, {a.bound, a.workers});
  if (io.as_json) {
    io.emit(json{{"nonrepetitive", report.nonrepetitive},
                 {"max_half_len", a.bound ? json(*a.bound) : json(nullptr)},
                 {"witness", report.witness ? witness_to_json(*report.witness) : json(nullptr)}});
  } else if (report.nonrepetitive) {
    io.emit_text("nonrepetitive\n");
  } else {
    io.emit_text("square path: " + join(report.witness->vertices) + "\ncolors: " + word_text(report.witness->colors) +
            "\n");
  }
  return report.nonrepetitive ? kOk : kNegative;
}

// --- solve ------------------------------------------------------------------

struct SolveArgs {
  std::string input;
  std::optional<std::size_t> k;
  std::optional<std::size_t> bound;
  std::optional<std::uint64_t> budget;
  bool minimize = false;
  bool enumerate = false;
  bool quotient = false;
};

int exit_for(Status s) {
  switch (s) {
    case Status::Sat: return kOk;
    case Status::Unsat: return kNegative;
    case Status::BudgetExceeded: return kInconclusive;
  }
  return kFailure;
}

ThueQuery make_query(const SolveArgs& a, const GraphDocument& doc) {
  if (!a.k && !doc.constraints) throw InvalidArgument("solve needs --k or per-edge constraints");
  ThueQuery q;
  q.graph = doc.graph;
  q.palette_size = a.k.value_or(0);
  q.constraints = doc.constraints;
  q.max_half_len = a.bound;
  q.budget = a.budget;
  return q;
}

int do_enumerate(const SolveArgs& a, const GraphDocument& doc, const Io& io) {
  ThueQuery q = make_query(a, doc);
  q.enumerate_all = true;
  q.quotient = a.quotient;
  const auto r = enumerate_colorings(q);
  if (io.as_json) {
    json list = json::array();
    for (const auto& c : r.colorings) list.push_back(c.colors());
    io.emit(json{{"status", to_string(r.status)}, {"nodes", r.nodes}, {"count", r.colorings.size()},
                 {"colorings", std::move(list)}});
  } else {
    std::string text = std::string(to_string(r.status)) + " " + std::to_string(r.colorings.size()) + "\n";
    for (const auto& c : r.colorings) text += word_text(c.colors()) + "\n";
    io.emit_text(text);
  }
  return exit_for(r.status);
}

int do_solve(const SolveArgs& a, const Io& io) {
  GraphDocument doc = parse_graph(read_input(a.input));
  if (doc.graph.edge_count() > kUnbudgetedEdgeLimit && !a.budget) {
    throw InvalidArgument("graphs with more than " + std::to_string(kUnbudgetedEdgeLimit) +
                          " edges need --budget");
  }
  if (a.enumerate) return do_enumerate(a, doc, io);
  Status status;
  std::uint64_t nodes = 0;
  std::optional<EdgeColoring> coloring;
  std::optional<std::size_t> value;
  if (a.minimize) {
    if (doc.constraints) throw InvalidArgument("--minimize does not take constraints");
    auto r = thue_number(doc.graph, a.bound, a.budget);
    status = r.status;
    nodes = r.nodes;
    coloring = std::move(r.coloring);
    value = r.value;
  } else {
    auto r = decide_thue(make_query(a, doc));
    status = r.status;
    nodes = r.nodes;
    coloring = std::move(r.coloring);
  }
  if (io.as_json) {
    json j{{"status", to_string(status)}, {"nodes", nodes}};
    if (a.minimize) j["thue_number"] = value ? json(*value) : json(nullptr);
    j["coloring"] = coloring ? graph_to_json(doc.graph, &*coloring) : json(nullptr);
    io.emit(j);
  } else {
    std::string text = std::string(to_string(status)) + "\n";
    if (value) text += "thue number " + std::to_string(*value) + "\n";
    if (coloring) text += word_text(coloring->colors()) + "\n";
    io.emit_text(text);
  }
  if (coloring) {
    DotOptions d;
    d.coloring = &*coloring;
    io.emit_dot(to_dot(doc.graph, d));
  }
  return exit_for(status);
}

// --- reduce / verify-reduction --------------------------------------------

const std::vector<std::string> kSources = {"3sat-dir", "3sat-undir", "qbf-restricted", "clam", "qbf-thue"};

struct ReduceArgs {
  std::string from;
  std::string input;
  std::optional<std::size_t> clique_exponent;
  std::uint64_t budget = kDefaultVerifyBudget;
  unsigned workers = 1;
};

ThueOptions thue_options(const ReduceArgs& a) {
  ThueOptions o;
  o.clique_exponent = a.clique_exponent;
  return o;
}

ReductionArtifact build_artifact(const ReduceArgs& a, const std::string& text) {
  if (a.from == "3sat-dir") return reduce_3sat_directed(parse_dimacs(text));
  if (a.from == "3sat-undir") return reduce_3sat_undirected(parse_dimacs(text));
  if (a.from == "qbf-restricted") return reduce_qbf_restricted(parse_qdimacs(text));
  if (a.from == "clam") return reduce_edgecoloring_clam(parse_graph(text).graph);
  return thue_instance_artifact(reduce_qbf_thue(parse_qdimacs(text), thue_options(a)));
}

std::string artifact_dot(const ReductionArtifact& art) {
  DotOptions d;
  if (art.coloring) d.coloring = &*art.coloring;
  if (!art.color_names.empty()) d.color_names = &art.color_names;
  d.vertex_clusters = &art.vertex_gadget;
  d.name = art.kind;
  return to_dot(art.graph, d);
}

int do_reduce(const ReduceArgs& a, const Io& io) {
  const ReductionArtifact art = build_artifact(a, read_input(a.input));
  io.emit(artifact_to_json(art));
  io.emit_dot(artifact_dot(art));
  return kOk;
}

json color_class_report(const ReductionArtifact& art) {
  std::map<Color, std::size_t> sizes;
  for (Color c : art.coloring->colors()) ++sizes[c];
  std::size_t largest = 0;
  for (const auto& [c, n] : sizes) largest = std::max(largest, n);
  std::size_t in = 0, out = 0;
  if (art.graph.directed()) {
    for (VertexId v = 0; v < art.graph.vertex_count(); ++v) {
      in = std::max(in, art.graph.in_degree(v));
      out = std::max(out, art.graph.out_degree(v));
    }
  }
  return {{"largest_color_class", largest}, {"max_in_degree", in}, {"max_out_degree", out}};
}

int verify_sat(const ReduceArgs& a, const std::string& text, const Io& io) {
  const CNFFormula f = parse_dimacs(text);
  const auto art = a.from == "3sat-dir" ? reduce_3sat_directed(f) : reduce_3sat_undirected(f);
  const auto sat = sat_bruteforce(f);
  const auto square = find_square_path(art.graph, *art.coloring, {art.max_half_len, a.workers});
  bool ok = sat.has_value() == square.has_value();
  json report{{"from", a.from},
              {"satisfiable", sat.has_value()},
              {"square_path", square.has_value()},
              {"structure", color_class_report(art)}};
  const auto& s = report["structure"];
  ok = ok && s["largest_color_class"].get<std::size_t>() <= 4 && s["max_in_degree"].get<std::size_t>() <= 3 &&
       s["max_out_degree"].get<std::size_t>() <= 3;
  if (sat) {
    const SquareWitness w = witness_square_path(art, f, *sat);
    const bool valid = validate_witness(art.graph, *art.coloring, w);
    report["witness_valid"] = valid;
    ok = ok && valid;
  }
  report["consistent"] = ok;
  io.emit(report);
  return ok ? kOk : kNegative;
}

int verify_restricted(const std::string& text, const Io& io) {
  const QBFInstance q = parse_qdimacs(text);
  const auto art = reduce_qbf_restricted(q);
  std::optional<std::uint64_t> cert;
  const bool colorable = restricted_colorable(art, &cert);
  const bool holds = forall_exists(q);
  const bool ok = colorable == !holds;
  io.emit(json{{"from", "qbf-restricted"},
               {"forall_exists", holds},
               {"colorable", colorable},
               {"choice_bits", cert ? json(*cert) : json(nullptr)},
               {"consistent", ok}});
  return ok ? kOk : kNegative;
}

int verify_clam(const ReduceArgs& a, const std::string& text, const Io& io) {
  const Graph g = parse_graph(text).graph;
  const auto art = reduce_edgecoloring_clam(g);
  const auto ec = three_edge_colorable(g);
  json report{{"from", "clam"}, {"three_edge_colorable", ec.has_value()}};
  bool ok = true;
  if (ec) {
    const auto c = clam_coloring_from_3ec(art, g, *ec);
    const bool clean = is_nonrepetitive(art.graph, c, {art.max_half_len, a.workers}).nonrepetitive;
    report["transported_coloring_nonrepetitive"] = clean;
    ok = clean;
  }
  ThueQuery q;
  q.graph = art.graph;
  q.palette_size = art.palette_size;
  q.max_half_len = art.max_half_len;
  q.budget = a.budget;
  const auto r = decide_thue(q);
  report["solver"] = to_string(r.status);
  report["solver_nodes"] = r.nodes;
  if (r.status == Status::BudgetExceeded) {
    report["consistent"] = ok;
    io.emit(report);
    return ok ? kInconclusive : kNegative;
  }
  ok = ok && ((r.status == Status::Sat) == ec.has_value());
  report["consistent"] = ok;
  io.emit(report);
  return ok ? kOk : kNegative;
}

int verify_thue(const ReduceArgs& a, const std::string& text, const Io& io) {
  const QBFInstance q = parse_qdimacs(text);
  const ThueInstance inst = reduce_qbf_thue(q, thue_options(a));
  bool params_ok = (std::uint64_t{1} << inst.ell) >= inst.c + inst.u + 1 &&
                   (inst.ell == 0 || (std::uint64_t{1} << (inst.ell - 1)) < inst.c + inst.u + 1) &&
                   inst.m == 4 * inst.ell + 3;
  std::size_t distance_failures = 0;
  for (std::size_t i = 0; i < inst.gadgets.size(); ++i) {
    const auto& g = inst.gadgets[i];
    if (g.kind != 'E' && g.kind != 'P') continue;
    const Graph local = inst.gadget_graph(i);
    const auto d = bfs_distances(local, 0);
    auto at = [&](VertexId v) { return d[2 + (v - g.first_vertex)]; };
    if (d[1] != 7 || at(g.attach[0]) != 3 || at(g.attach[1]) != 4) ++distance_failures;
  }
  std::size_t unsaturated = 0;
  for (const auto& c : inst.consistency) {
    for (VertexId v : c.members) unsaturated += inst.degree(v) != inst.palette_size();
  }
  const bool ok = params_ok && distance_failures == 0 && unsaturated == 0;
  io.emit(json{{"from", "qbf-thue"},
               {"c", inst.c},
               {"u", inst.u},
               {"ell", inst.ell},
               {"m", inst.m},
               {"palette_size", inst.palette_size()},
               {"gadgets", inst.gadgets.size()},
               {"consistency_gadgets", inst.consistency.size()},
               {"distance_failures", distance_failures},
               {"unsaturated_clique_members", unsaturated},
               {"total_vertices", inst.total_vertices()},
               {"total_edges", inst.total_edges()},
               {"consistent", ok}});
  return ok ? kOk : kNegative;
}

int do_verify(const ReduceArgs& a, const Io& io) {
  const std::string text = read_input(a.input);
  if (a.from == "3sat-dir" || a.from == "3sat-undir") return verify_sat(a, text, io);
  if (a.from == "qbf-restricted") return verify_restricted(text, io);
  if (a.from == "clam") return verify_clam(a, text, io);
  return verify_thue(a, text, io);
}

// --- hypercube / word / export-dot -----------------------------------------

struct CubeArgs {
  std::size_t k = 3;
  std::uint64_t seed = 0;
  std::size_t samples = 8;
};

int do_cube_verify(const CubeArgs& a, const Io& io) {
  const Lemma2Report r = verify_lemma2(a.k, a.seed, a.samples);
  if (io.as_json) {
    io.emit(lemma2_to_json(r));
  } else {
    auto line = [](const char* name, const PropertyResult& p) {
      return std::string(name) + ": " + (p.holds ? "ok" : "FAILED " + p.counterexample.value_or("")) + "\n";
    };
    io.emit_text("k=" + std::to_string(r.k) + " starts=" + std::to_string(r.starts_checked) +
            (r.sampled ? " (sampled)" : "") + "\n" + line("shortest paths distinct colors", r.shortest_distinct) +
            line("distinct color sets are permutations", r.permutations) +
            line("distinct colors give shortest paths", r.distinct_shortest) + line("layer sizes", r.layer_sizes));
  }
  return r.all_hold() ? kOk : kNegative;
}

int do_cube_build(const CubeArgs& a, const Io& io) {
  const auto h = build_hypercube(a.k);
  io.emit(graph_to_json(h.graph, &h.coloring));
  DotOptions d;
  d.coloring = &h.coloring;
  io.emit_dot(to_dot(h.graph, d));
  return kOk;
}

int do_word_gen(std::size_t n, const Io& io) {
  const ColorWord w = squarefree_ternary_word(n);
  io.emit_text(io.as_json ? json{{"word", word_text(w)}}.dump(2) + "\n" : word_text(w) + "\n");
  return kOk;
}

int do_word_check(const std::string& text, const Io& io) {
  const auto sq = find_square(word_from_text(text));
  if (io.as_json) {
    json j{{"squarefree", !sq.has_value()}};
    if (sq) j["square"] = {{"start", sq->start}, {"half_len", sq->half_len}};
    io.emit(j);
  } else if (sq) {
    io.emit_text("square at (" + std::to_string(sq->start) + "," + std::to_string(sq->half_len) + ")\n");
  } else {
    io.emit_text("squarefree\n");
  }
  return sq ? kNegative : kOk;
}

int do_export_dot(const std::string& input, const Io& io) {
  json j;
  try {
    j = json::parse(read_input(input));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (j.contains("kind")) {
    io.emit_text(artifact_dot(artifact_from_json(j)));
  } else {
    const GraphDocument doc = graph_from_json(j);
    DotOptions d;
    if (doc.coloring) d.coloring = &*doc.coloring;
    io.emit_text(to_dot(doc.graph, d));
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonrepetitive edge coloring toolkit", "thue"};
  app.require_subcommand(1);
  Io io{out, err, {}, {}, false};
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", io.output, "Output file (default stdout)");
    sub->add_flag("--json", io.as_json, "Machine-readable output");
  };
  auto add_dot = [&](CLI::App* sub) { sub->add_option("--dot", io.dot, "Also write Graphviz DOT to this file"); };

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Look for a square path in a colored graph");
  c->add_option("input", check.input, "Graph JSON with coloring (default stdin)");
  c->add_option("--bound", check.bound, "Maximum half length");
  c->add_option("--workers", check.workers, "Search threads")->check(CLI::Range(1u, 256u));
  add_output(c);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Search for a nonrepetitive coloring");
  s->add_option("input", solve.input, "Graph JSON, optionally with constraints (default stdin)");
  s->add_option("--k", solve.k, "Palette size")->check(CLI::PositiveNumber);
  s->add_option("--bound", solve.bound, "Maximum half length");
  s->add_option("--budget", solve.budget, "Node budget");
  s->add_flag("--minimize", solve.minimize, "Compute the least palette size instead");
  s->add_flag("--enumerate", solve.enumerate, "List every solution");
  s->add_flag("--quotient", solve.quotient, "With --enumerate, one solution per color permutation class");
  add_output(s);
  add_dot(s);

  ReduceArgs reduce;
  auto* r = app.add_subcommand("reduce", "Generate a reduction instance");
  auto* v = app.add_subcommand("verify-reduction", "Check a reduction against its oracle");
  for (auto* sub : {r, v}) {
    sub->add_option("--from", reduce.from, "Source problem")->required()->check(CLI::IsMember(kSources));
    sub->add_option("input", reduce.input, "DIMACS, QDIMACS or graph JSON (default stdin)");
    sub->add_option("--clique-exponent", reduce.clique_exponent, "Override the clique exponent (qbf-thue)");
    add_output(sub);
  }
  add_dot(r);
  v->add_option("--budget", reduce.budget, "Solver node budget (clam)");
  v->add_option("--workers", reduce.workers, "Search threads")->check(CLI::Range(1u, 256u));

  CubeArgs cube;
  auto* h = app.add_subcommand("hypercube", "Hypercube dimension colorings");
  h->require_subcommand(1);
  auto* hv = h->add_subcommand("verify", "Check the distance/color properties");
  auto* hb = h->add_subcommand("build", "Write the dimension-colored cube");
  for (auto* sub : {hv, hb}) {
    sub->add_option("--k", cube.k, "Dimension")->required();
    add_output(sub);
  }
  hv->add_option("--seed", cube.seed, "Seed for sampled start vertices");
  hv->add_option("--samples", cube.samples, "Start vertices sampled when k > 4");
  add_dot(hb);

  std::optional<std::size_t> gen_len;
  std::optional<std::string> check_word;
  auto* w = app.add_subcommand("word", "Square-free words");
  w->add_option("--gen", gen_len, "Generate a square-free word of this length");
  w->add_option("--check", check_word, "Report the first square in a word");
  add_output(w);
  auto* wg = w->add_subcommand("gen", "Generate a square-free word");
  wg->add_option("n", gen_len)->required();
  auto* wc = w->add_subcommand("check", "Report the first square in a word");
  wc->add_option("word", check_word)->required();
  for (auto* sub : {wg, wc}) add_output(sub);

  std::string dot_input;
  auto* d = app.add_subcommand("export-dot", "Render graph or artifact JSON as DOT");
  d->add_option("input", dot_input, "Graph or artifact JSON (default stdin)");
  d->add_option("-o,--output", io.output, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << e.what() << "\n";
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (c->parsed()) return do_check(check, io);
    if (s->parsed()) return do_solve(solve, io);
    if (r->parsed()) return do_reduce(reduce, io);
    if (v->parsed()) return do_verify(reduce, io);
    if (hv->parsed()) return do_cube_verify(cube, io);
    if (hb->parsed()) return do_cube_build(cube, io);
    if (w->parsed()) {
      if (gen_len.has_value() == check_word.has_value()) throw InvalidArgument("word needs exactly one of gen / check");
      return gen_len ? do_word_gen(*gen_len, io) : do_word_check(*check_word, io);
    }
    if (d->parsed()) return do_export_dot(dot_input, io);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace thue::cli

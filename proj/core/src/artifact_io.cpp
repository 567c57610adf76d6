#include <utility>

#include "thue/io.hpp"
#include "thue/reductions.hpp"

namespace thue {

namespace {

using nlohmann::json;

bool same_graph(const Graph& a, const Graph& b) {
  return a.directed() == b.directed() && a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

json edges_to_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::vector<Edge> edges_from_json(const json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.push_back({e.at(0).get<VertexId>(), e.at(1).get<VertexId>()});
  return out;
}

json layout_to_json(const SatLayout& l) {
  std::vector<int> in_snout(l.base_in_snout.begin(), l.base_in_snout.end());
  return {{"n", l.n},
          {"m", l.m},
          {"M", l.M},
          {"branch_len", l.branch_len},
          {"snout_len", l.snout_len},
          {"snout", l.snout},
          {"begin", l.begin},
          {"true_branch", l.true_branch},
          {"false_branch", l.false_branch},
          {"clause", l.clause},
          {"detour", l.detour},
          {"base_edges", edges_to_json(l.base_edges)},
          {"base_colors", l.base_colors},
          {"base_in_snout", in_snout},
          {"expansion", l.expansion},
          {"rank", l.rank},
          {"universal", l.universal},
          {"choice_edges", l.choice_edges},
          {"choice_colors", l.choice_colors}};
}

SatLayout layout_from_json(const json& j) {
  SatLayout l;
  j.at("n").get_to(l.n);
  j.at("m").get_to(l.m);
  j.at("M").get_to(l.M);
  j.at("branch_len").get_to(l.branch_len);
  j.at("snout_len").get_to(l.snout_len);
  j.at("snout").get_to(l.snout);
  j.at("begin").get_to(l.begin);
  j.at("true_branch").get_to(l.true_branch);
  j.at("false_branch").get_to(l.false_branch);
  j.at("clause").get_to(l.clause);
  j.at("detour").get_to(l.detour);
  l.base_edges = edges_from_json(j.at("base_edges"));
  j.at("base_colors").get_to(l.base_colors);
  for (int x : j.at("base_in_snout").get<std::vector<int>>()) l.base_in_snout.push_back(static_cast<char>(x));
  j.at("expansion").get_to(l.expansion);
  j.at("rank").get_to(l.rank);
  j.at("universal").get_to(l.universal);
  j.at("choice_edges").get_to(l.choice_edges);
  j.at("choice_colors").get_to(l.choice_colors);
  return l;
}

}  // namespace

bool operator==(const ReductionArtifact& a, const ReductionArtifact& b) {
  return a.kind == b.kind && same_graph(a.graph, b.graph) && a.coloring == b.coloring &&
         a.constraints == b.constraints && a.palette_size == b.palette_size && a.max_half_len == b.max_half_len &&
         a.vertex_gadget == b.vertex_gadget && a.edge_gadget == b.edge_gadget && a.color_names == b.color_names &&
         a.params == b.params && a.layout == b.layout && a.extra == b.extra;
}

json artifact_to_json(const ReductionArtifact& art) {
  json j;
  j["kind"] = art.kind;
  j["graph"] = graph_to_json(art.graph, art.coloring ? &*art.coloring : nullptr,
                             art.constraints ? &*art.constraints : nullptr);
  if (art.coloring && art.coloring->palette_size()) j["coloring_palette"] = *art.coloring->palette_size();
  j["palette_size"] = art.palette_size;
  j["max_half_len"] = art.max_half_len ? json(*art.max_half_len) : json(nullptr);
  j["vertex_gadget"] = art.vertex_gadget;
  j["edge_gadget"] = art.edge_gadget;
  j["color_names"] = art.color_names;
  j["params"] = art.params;
  if (art.layout) j["layout"] = layout_to_json(*art.layout);
  j["extra"] = art.extra;
  return j;
}

ReductionArtifact artifact_from_json(const json& j) {
  ReductionArtifact art;
  try {
    j.at("kind").get_to(art.kind);
    GraphDocument doc = graph_from_json(j.at("graph"));
    art.graph = std::move(doc.graph);
    if (doc.coloring) {
      std::optional<std::size_t> palette;
      if (j.contains("coloring_palette")) palette = j.at("coloring_palette").get<std::size_t>();
      const auto colors = doc.coloring->colors();
      art.coloring = EdgeColoring(std::vector<Color>(colors.begin(), colors.end()), palette);
    }
    art.constraints = std::move(doc.constraints);
    j.at("palette_size").get_to(art.palette_size);
    if (!j.at("max_half_len").is_null()) art.max_half_len = j.at("max_half_len").get<std::size_t>();
    j.at("vertex_gadget").get_to(art.vertex_gadget);
    j.at("edge_gadget").get_to(art.edge_gadget);
    j.at("color_names").get_to(art.color_names);
    art.params = j.at("params");
    if (j.contains("layout")) art.layout = layout_from_json(j.at("layout"));
    art.extra = j.value("extra", json::object());
  } catch (const json::exception& ex) {
    throw ParseError(std::string("malformed artifact: ") + ex.what());
  }
  if (art.vertex_gadget.size() != art.graph.vertex_count() || art.edge_gadget.size() != art.graph.edge_count()) {
    throw ParseError("artifact gadget tags do not match the graph");
  }
  return art;
}

}  // namespace thue

#include "thue/io.hpp"

#include <fstream>
#include <sstream>

namespace thue {

namespace {

using nlohmann::json;

EdgeId parse_edge_key(const std::string& key, std::size_t edge_count) {
  std::size_t pos = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(key, &pos);
  } catch (const std::exception&) {
    throw ParseError("edge key '" + key + "' is not an integer");
  }
  if (pos != key.size()) throw ParseError("edge key '" + key + "' is not an integer");
  if (value >= edge_count) throw ParseError("edge key " + key + " is out of range");
  return static_cast<EdgeId>(value);
}

}  // namespace

GraphDocument graph_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("graph document must be an object");
  GraphDocument doc;
  try {
    const bool directed = j.value("directed", false);
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge entries must be [u, v] pairs");
      const auto u = e[0].get<long long>();
      const auto v = e[1].get<long long>();
      if (u < 0 || v < 0) throw ParseError("negative vertex id");
      edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
    doc.graph = Graph(n, std::move(edges), directed);

    const std::size_t m = doc.graph.edge_count();
    if (j.contains("coloring")) {
      std::vector<Color> colors(m, EdgeColoring::kUnassigned);
      for (const auto& [key, value] : j.at("coloring").items()) {
        const auto c = value.get<long long>();
        if (c < 0) throw ParseError("negative color on edge " + key);
        colors[parse_edge_key(key, m)] = static_cast<Color>(c);
      }
      doc.coloring = EdgeColoring(std::move(colors));
    }
    if (j.contains("constraints")) {
      std::vector<std::vector<Color>> sets(m);
      std::vector<char> seen(m, 0);
      for (const auto& [key, value] : j.at("constraints").items()) {
        const EdgeId e = parse_edge_key(key, m);
        seen[e] = 1;
        for (const auto& c : value) {
          const auto id = c.get<long long>();
          if (id < 0) throw ParseError("negative color in constraint of edge " + key);
          sets[e].push_back(static_cast<Color>(id));
        }
      }
      for (std::size_t e = 0; e < m; ++e) {
        if (!seen[e]) throw ParseError("constraints missing for edge " + std::to_string(e));
      }
      doc.constraints = ColorConstraint(std::move(sets));
    }
  } catch (const json::exception& ex) {
    throw ParseError(std::string("malformed graph JSON: ") + ex.what());
  } catch (const InvalidArgument& ex) {
    throw ParseError(std::string("invalid graph: ") + ex.what());
  }
  return doc;
}

json graph_to_json(const Graph& g, const EdgeColoring* coloring, const ColorConstraint* constraints) {
  json j;
  j["directed"] = g.directed();
  j["n"] = g.vertex_count();
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (coloring) {
    json c = json::object();
    for (EdgeId e = 0; e < coloring->size(); ++e) {
      if (coloring->is_assigned(e)) c[std::to_string(e)] = (*coloring)[e];
    }
    j["coloring"] = std::move(c);
  }
  if (constraints) {
    json c = json::object();
    for (EdgeId e = 0; e < constraints->size(); ++e) c[std::to_string(e)] = constraints->allowed(e);
    j["constraints"] = std::move(c);
  }
  return j;
}

GraphDocument parse_graph(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  return graph_from_json(j);
}

GraphDocument load_graph(const std::string& path) { return parse_graph(read_file(path)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

}  // namespace thue

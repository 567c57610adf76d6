#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "thue/graph.hpp"

namespace thue {

/// A graph together with the optional coloring and constraints found in a
/// graph JSON document.
struct GraphDocument {
  Graph graph;
  std::optional<EdgeColoring> coloring;
  std::optional<ColorConstraint> constraints;
};

// {"directed": bool, "n": int, "edges": [[u,v],...],
//  "coloring": {"<edge>": color,...}, "constraints": {"<edge>": [colors],...}}
// Coloring entries that are absent stay unassigned. When "constraints" is
// present every edge must have an entry.
GraphDocument graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g, const EdgeColoring* coloring = nullptr,
                             const ColorConstraint* constraints = nullptr);

GraphDocument parse_graph(const std::string& text);
GraphDocument load_graph(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace thue

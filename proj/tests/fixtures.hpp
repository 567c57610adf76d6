#pragma once

#include <vector>

#include "thue/graph.hpp"

namespace fixture {

using thue::Edge;
using thue::Graph;
using thue::VertexId;

inline Graph path(std::size_t edges) {
  std::vector<Edge> e;
  for (VertexId i = 0; i < edges; ++i) e.push_back({i, i + 1});
  return Graph(edges + 1, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId i = 0; i < n; ++i) e.push_back({i, static_cast<VertexId>((i + 1) % n)});
  return Graph(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) e.push_back({a, b});
  }
  return Graph(n, e);
}

inline Graph k33() {
  std::vector<Edge> e;
  for (VertexId a = 0; a < 3; ++a) {
    for (VertexId b = 3; b < 6; ++b) e.push_back({a, b});
  }
  return Graph(6, e);
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (VertexId i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph(leaves + 1, e);
}

}  // namespace fixture

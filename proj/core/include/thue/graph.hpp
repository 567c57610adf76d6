#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thue/types.hpp"

namespace thue {

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// One entry of an adjacency list: the vertex on the other side and the edge
/// that leads there.
struct Incidence {
  VertexId neighbor = 0;
  EdgeId edge = 0;
};

/// Simple graph, directed or undirected, with dense vertex ids.
///
/// Immutable once built. Edge ids are insertion order; endpoints are stored
/// as given, so for directed graphs (u, v) is the tail and head, and for
/// undirected graphs the order is informational only. Adjacency lists are
/// sorted by neighbor id, which fixes the traversal order of every search in
/// the library.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidArgument on out-of-range endpoints, self-loops or
  /// duplicate edges ((u,v) and (v,u) coincide when undirected).
  Graph(std::size_t vertex_count, std::vector<Edge> edges, bool directed = false);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool directed() const { return directed_; }
  bool empty() const { return vertex_count_ == 0; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const;

  /// Edges leaving v (every incident edge when undirected).
  std::span<const Incidence> out(VertexId v) const;
  /// Edges entering v (every incident edge when undirected).
  std::span<const Incidence> in(VertexId v) const;

  /// Number of incident edges; in + out for directed graphs.
  std::size_t degree(VertexId v) const;
  std::size_t out_degree(VertexId v) const;
  std::size_t in_degree(VertexId v) const;
  std::size_t max_degree() const;

  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  /// Given one endpoint of e, the other one.
  VertexId other_end(EdgeId e, VertexId v) const;

  void check_vertex(VertexId v) const;

 private:
  std::size_t vertex_count_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_;
  std::vector<Incidence> out_list_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Incidence> in_list_;
};

/// Accumulates vertices and edges, then produces an immutable Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(bool directed = false) : directed_(directed) {}
  explicit GraphBuilder(const Graph& g);

  VertexId add_vertex();
  /// Adds `count` vertices and returns the id of the first one.
  VertexId add_vertices(std::size_t count);
  EdgeId add_edge(VertexId u, VertexId v);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  Graph build() const;

 private:
  bool directed_ = false;
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Total or partial assignment edge -> color.
class EdgeColoring {
 public:
  static constexpr Color kUnassigned = -1;

  EdgeColoring() = default;
  explicit EdgeColoring(std::size_t edge_count, std::optional<std::size_t> palette = std::nullopt);
  /// Entries equal to kUnassigned are left unassigned. Throws on other
  /// negative ids or ids outside the declared palette.
  explicit EdgeColoring(std::vector<Color> colors, std::optional<std::size_t> palette = std::nullopt);

  std::size_t size() const { return colors_.size(); }
  std::optional<std::size_t> palette_size() const { return palette_; }

  Color operator[](EdgeId e) const { return colors_.at(e); }
  bool is_assigned(EdgeId e) const { return colors_.at(e) != kUnassigned; }
  bool is_total() const;

  void set(EdgeId e, Color c);
  void clear(EdgeId e) { colors_.at(e) = kUnassigned; }

  std::span<const Color> colors() const { return colors_; }
  /// Sorted distinct assigned colors.
  std::vector<Color> distinct_colors() const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<Color> colors_;
  std::optional<std::size_t> palette_;
};

/// Per-edge allowed color sets. Every set is sorted, deduplicated and non-empty.
class ColorConstraint {
 public:
  ColorConstraint() = default;
  explicit ColorConstraint(std::vector<std::vector<Color>> allowed);

  std::size_t size() const { return allowed_.size(); }
  const std::vector<Color>& allowed(EdgeId e) const { return allowed_.at(e); }
  bool permits(EdgeId e, Color c) const;

  /// Sorted union of all sets.
  std::vector<Color> palette() const;

  friend bool operator==(const ColorConstraint&, const ColorConstraint&) = default;

 private:
  std::vector<std::vector<Color>> allowed_;
};

// --- structural helpers -----------------------------------------------------

struct DegreeInfo {
  std::size_t in = 0;
  std::size_t out = 0;
  std::size_t total = 0;
};

DegreeInfo degree_info(const Graph& g, VertexId v);

/// True iff v has maximum degree in g. Throws on empty graphs.
bool is_saturated(const Graph& g, VertexId v);

using Diamond = std::array<VertexId, 4>;

/// Every 4-cycle of an undirected graph, once each. Each quadruple is in
/// canonical form (smallest vertex first, then the smaller of its two cycle
/// neighbors) and the list is sorted lexicographically.
std::vector<Diamond> diamonds(const Graph& g);

struct PlumeResult {
  Graph graph;
  std::vector<EdgeId> new_edges;
};

/// Attaches `count` new degree-1 vertices to v.
PlumeResult add_plume(const Graph& g, VertexId v, std::size_t count);

/// Shortest path length from u to v (following orientation when directed).
std::optional<std::size_t> bfs_distance(const Graph& g, VertexId u, VertexId v);

/// Distances from `source` to all vertices.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, VertexId source);

struct DotOptions {
  const EdgeColoring* coloring = nullptr;
  /// Optional human-readable color names indexed by color id.
  const std::vector<std::string>* color_names = nullptr;
  /// Optional per-vertex cluster tag; vertices with equal tags share a
  /// subgraph cluster.
  const std::vector<std::string>* vertex_clusters = nullptr;
  std::string name = "G";
};

/// Graphviz rendering. Export only; JSON is the persistent format.
std::string to_dot(const Graph& g, const DotOptions& options = {});

}  // namespace thue

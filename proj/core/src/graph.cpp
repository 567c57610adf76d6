#include "thue/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace thue {

namespace {

void build_csr(std::size_t n, const std::vector<std::pair<VertexId, Incidence>>& entries,
               std::vector<std::size_t>& offsets, std::vector<Incidence>& list) {
  offsets.assign(n + 1, 0);
  for (const auto& [v, inc] : entries) ++offsets[v + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  list.assign(entries.size(), Incidence{});
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [v, inc] : entries) list[cursor[v]++] = inc;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(list.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              list.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]),
              [](const Incidence& a, const Incidence& b) {
                return a.neighbor != b.neighbor ? a.neighbor < b.neighbor : a.edge < b.edge;
              });
  }
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, bool directed)
    : vertex_count_(vertex_count), directed_(directed), edges_(std::move(edges)) {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    if (u >= vertex_count_ || v >= vertex_count_) {
      throw InvalidArgument("edge " + std::to_string(i) + " has an endpoint out of range");
    }
    if (u == v) throw InvalidArgument("edge " + std::to_string(i) + " is a self-loop");
    auto key = directed_ ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) {
      throw InvalidArgument("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
  }

  std::vector<std::pair<VertexId, Incidence>> out_entries, in_entries;
  out_entries.reserve(edges_.size() * (directed_ ? 1 : 2));
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    out_entries.push_back({u, Incidence{v, e}});
    if (directed_) {
      in_entries.push_back({v, Incidence{u, e}});
    } else {
      out_entries.push_back({v, Incidence{u, e}});
    }
  }
  build_csr(vertex_count_, out_entries, out_offsets_, out_list_);
  if (directed_) build_csr(vertex_count_, in_entries, in_offsets_, in_list_);
}

const Edge& Graph::edge(EdgeId e) const {
  if (e >= edges_.size()) throw InvalidArgument("invalid edge id " + std::to_string(e));
  return edges_[e];
}

void Graph::check_vertex(VertexId v) const {
  if (v >= vertex_count_) throw InvalidArgument("invalid vertex id " + std::to_string(v));
}

std::span<const Incidence> Graph::out(VertexId v) const {
  check_vertex(v);
  return {out_list_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

std::span<const Incidence> Graph::in(VertexId v) const {
  if (!directed_) return out(v);
  check_vertex(v);
  return {in_list_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

std::size_t Graph::out_degree(VertexId v) const { return out(v).size(); }
std::size_t Graph::in_degree(VertexId v) const { return in(v).size(); }

std::size_t Graph::degree(VertexId v) const {
  return directed_ ? out_degree(v) + in_degree(v) : out_degree(v);
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (VertexId v = 0; v < vertex_count_; ++v) best = std::max(best, degree(v));
  return best;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  for (const auto& inc : out(u)) {
    if (inc.neighbor == v) return inc.edge;
  }
  return std::nullopt;
}

VertexId Graph::other_end(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw InvalidArgument("vertex " + std::to_string(v) + " is not an endpoint of edge " +
                        std::to_string(e));
}

// --- builder ------------------------------------------------------------------

GraphBuilder::GraphBuilder(const Graph& g)
    : directed_(g.directed()), vertex_count_(g.vertex_count()), edges_(g.edges()) {}

VertexId GraphBuilder::add_vertex() { return static_cast<VertexId>(vertex_count_++); }

VertexId GraphBuilder::add_vertices(std::size_t count) {
  const auto first = static_cast<VertexId>(vertex_count_);
  vertex_count_ += count;
  return first;
}

EdgeId GraphBuilder::add_edge(VertexId u, VertexId v) {
  edges_.push_back({u, v});
  return static_cast<EdgeId>(edges_.size() - 1);
}

Graph GraphBuilder::build() const { return Graph(vertex_count_, edges_, directed_); }

// --- colorings ----------------------------------------------------------------

EdgeColoring::EdgeColoring(std::size_t edge_count, std::optional<std::size_t> palette)
    : colors_(edge_count, kUnassigned), palette_(palette) {}

EdgeColoring::EdgeColoring(std::vector<Color> colors, std::optional<std::size_t> palette)
    : colors_(std::move(colors)), palette_(palette) {
  for (std::size_t e = 0; e < colors_.size(); ++e) {
    const Color c = colors_[e];
    if (c == kUnassigned) continue;
    if (c < 0) throw InvalidArgument("negative color id on edge " + std::to_string(e));
    if (palette_ && static_cast<std::size_t>(c) >= *palette_) {
      throw InvalidArgument("color " + std::to_string(c) + " on edge " + std::to_string(e) +
                            " is outside the palette of size " + std::to_string(*palette_));
    }
  }
}

bool EdgeColoring::is_total() const {
  return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == kUnassigned; });
}

void EdgeColoring::set(EdgeId e, Color c) {
  if (c < 0) throw InvalidArgument("negative color id");
  if (palette_ && static_cast<std::size_t>(c) >= *palette_) {
    throw InvalidArgument("color " + std::to_string(c) + " is outside the palette");
  }
  colors_.at(e) = c;
}

std::vector<Color> EdgeColoring::distinct_colors() const {
  std::vector<Color> out;
  for (Color c : colors_) {
    if (c != kUnassigned) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ColorConstraint::ColorConstraint(std::vector<std::vector<Color>> allowed)
    : allowed_(std::move(allowed)) {
  for (std::size_t e = 0; e < allowed_.size(); ++e) {
    auto& set = allowed_[e];
    if (set.empty()) throw InvalidArgument("empty color set on edge " + std::to_string(e));
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.front() < 0) throw InvalidArgument("negative color id in set of edge " + std::to_string(e));
  }
}

bool ColorConstraint::permits(EdgeId e, Color c) const {
  const auto& set = allowed_.at(e);
  return std::binary_search(set.begin(), set.end(), c);
}

std::vector<Color> ColorConstraint::palette() const {
  std::vector<Color> out;
  for (const auto& set : allowed_) out.insert(out.end(), set.begin(), set.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- structure ----------------------------------------------------------------

DegreeInfo degree_info(const Graph& g, VertexId v) {
  DegreeInfo info;
  info.out = g.out_degree(v);
  info.in = g.in_degree(v);
  info.total = g.degree(v);
  return info;
}

bool is_saturated(const Graph& g, VertexId v) {
  if (g.empty()) throw InvalidArgument("is_saturated on an empty graph");
  g.check_vertex(v);
  return g.degree(v) == g.max_degree();
}

std::vector<Diamond> diamonds(const Graph& g) {
  if (g.directed()) throw InvalidArgument("diamonds requires an undirected graph");
  std::vector<Diamond> out;
  const auto n = static_cast<VertexId>(g.vertex_count());
  std::vector<char> is_nb(n, 0);
  for (VertexId a = 0; a < n; ++a) {
    // a is the smallest vertex of the cycle; b < d are its cycle neighbors and
    // c is the vertex opposite a.
    const auto nbrs = g.out(a);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const VertexId b = nbrs[i].neighbor;
      if (b < a) continue;
      for (const auto& inc : g.out(b)) is_nb[inc.neighbor] = 1;
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const VertexId d = nbrs[j].neighbor;
        if (d < a) continue;
        for (const auto& inc : g.out(d)) {
          const VertexId c = inc.neighbor;
          if (c > a && c != b && is_nb[c]) out.push_back({a, b, c, d});
        }
      }
      for (const auto& inc : g.out(b)) is_nb[inc.neighbor] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PlumeResult add_plume(const Graph& g, VertexId v, std::size_t count) {
  g.check_vertex(v);
  GraphBuilder builder(g);
  PlumeResult result;
  for (std::size_t i = 0; i < count; ++i) {
    const VertexId leaf = builder.add_vertex();
    result.new_edges.push_back(builder.add_edge(v, leaf));
  }
  result.graph = builder.build();
  return result;
}

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, VertexId source) {
  g.check_vertex(source);
  std::vector<std::optional<std::size_t>> dist(g.vertex_count());
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (const auto& inc : g.out(x)) {
      if (!dist[inc.neighbor]) {
        dist[inc.neighbor] = *dist[x] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> bfs_distance(const Graph& g, VertexId u, VertexId v) {
  g.check_vertex(v);
  return bfs_distances(g, u)[v];
}

// --- DOT ----------------------------------------------------------------------

std::string to_dot(const Graph& g, const DotOptions& options) {
  std::ostringstream os;
  const char* arrow = g.directed() ? " -> " : " -- ";
  os << (g.directed() ? "digraph " : "graph ") << options.name << " {\n";
  if (options.vertex_clusters) {
    const auto& tags = *options.vertex_clusters;
    std::map<std::string, std::vector<VertexId>> groups;
    for (VertexId v = 0; v < g.vertex_count() && v < tags.size(); ++v) groups[tags[v]].push_back(v);
    std::size_t idx = 0;
    for (const auto& [tag, members] : groups) {
      os << "  subgraph cluster_" << idx++ << " {\n    label=\"" << tag << "\";\n";
      for (VertexId v : members) os << "    " << v << ";\n";
      os << "  }\n";
    }
  } else {
    for (VertexId v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edges()[e];
    os << "  " << u << arrow << v;
    if (options.coloring && e < options.coloring->size() && options.coloring->is_assigned(e)) {
      const Color c = (*options.coloring)[e];
      os << " [label=\"";
      if (options.color_names && static_cast<std::size_t>(c) < options.color_names->size()) {
        os << (*options.color_names)[static_cast<std::size_t>(c)];
      } else {
        os << c;
      }
      os << "\"]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace thue
